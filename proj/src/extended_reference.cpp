#include "ssy/extended_reference.hpp"

#include "ssy/errors.hpp"

namespace ssy::reference {

namespace {

Real power(const Real& base, const Real& expo)
{
    if (base == 0) {
        return Real(0);
    }
    return boost::multiprecision::exp(expo * boost::multiprecision::log(base));
}

Real self_power(const Real& q, const Real& expo)
{
    // q^expo with 0^0 = 1.
    if (q == 0) {
        return Real(1);
    }
    return power(q, expo);
}

} // namespace

Bundle evaluate(int n, double q_double)
{
    const Real q(q_double);
    const Real N(n);
    const Real A = Real(2) / N - q * q;
    if (n < 2 || q < 0 || A <= 0) {
        throw DomainError("extended reference: point outside the admissible domain");
    }
    const Real one = 1;
    const Real t = one + q;  // 1+q
    const Real t2 = t * t;
    const Real B = q * q + 2 * q + 2;

    Bundle r;
    r.A = A;
    r.C1 = 2 / A + 8 * B / (A * A);
    r.C3 = (2 + q) * (one + 2 * t / A + 8 * t * B / (A * A));
    r.CY = power(Real(2), t) * self_power(q, q) / power(t, t) * power(r.C3, t);
    r.C3H = 2 * t2 * (one + 2 * t2 / A + 8 * t2 * B / (A * A));
    r.CH = power(r.C3H, t);
    r.ratio = r.CH / r.CY;
    const Real D = one + 2 * t / A + 8 * t * B / (A * A);
    r.ratio_root = t * t2 / (self_power(q, q / t) * (2 + q)) * (one + q * (D - 1) / D);
    r.f_bound = (q > 0 && q < 1) ? t2 * t2 / (self_power(q, q / t) * (2 + q)) : Real(0);

    r.delta = A / (4 * t2);
    const Real d1 = one + r.delta;
    r.C0 = 4 * d1 * t2 / A + 16 * t2 * (one + d1 * d1 * t2) / (A * A);
    const Real pos = 4 * N * (N - 2) * (N - 2) * t2 / ((N - 1) * A * A);
    const Real neg1 = 8 * N / A;
    const Real neg2 = N / t2;
    r.B0_raw = pos - neg1 - neg2;
    r.B0_scale = pos > neg1 ? (pos > neg2 ? pos : neg2) : (neg1 > neg2 ? neg1 : neg2);
    r.B0 = r.B0_raw > 0 ? r.B0_raw : Real(0);
    r.a = 2 * t2 * (r.C0 + 1);
    const Real b_raw = 2 * t2 * r.B0 - N;
    r.b = b_raw > 0 ? b_raw : Real(0);
    r.b_scale = 2 * t2 * r.B0_scale + N;
    const Real two_q = power(Real(2), q);
    r.calC1 = two_q * power(r.a, t);
    r.calC2 = two_q * power(r.b, t);
    r.calC2_scale = two_q * power(r.b_scale, t);
    return r;
}

} // namespace ssy::reference
