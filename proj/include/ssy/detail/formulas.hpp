#pragma once

// Closed-form and generalized closure formulas that only need field
// operations. They are templates so the same expressions can be instantiated
// with binary64 and with exact rationals in the tests.

namespace ssy::detail {

template <class T>
T gap(int n, const T& q)
{
    return T(2) / T(n) - q * q;
}

template <class T>
T quadratic_aux(const T& q)
{
    return q * q + T(2) * q + T(2);
}

template <class T>
T d_factor(const T& A, const T& q)
{
    const T one_q = T(1) + q;
    return T(1) + T(2) * one_q / A + T(8) * one_q * quadratic_aux(q) / (A * A);
}

template <class T>
T c1_shared(const T& A, const T& q)
{
    return T(2) / A + T(8) * quadratic_aux(q) / (A * A);
}

template <class T>
T c3_young(const T& q, const T& c1)
{
    return (T(2) + q) * ((T(1) + q) * c1 + T(1));
}

template <class T>
T c3_holder(const T& q, const T& c1)
{
    const T sq = (T(1) + q) * (T(1) + q);
    return T(2) * sq * (sq * c1 + T(1));
}

// Left coefficient (A - eps1 - eps2) and resulting gradient constant.
template <class T>
T c1_general(const T& A, const T& q, const T& eps1, const T& eps2)
{
    const T one_q = T(1) + q;
    return (T(1) / eps1 + T(1) + one_q * one_q / eps2) / (A - eps1 - eps2);
}

template <class T>
T c3_general(const T& q, const T& c1, const T& eps3)
{
    const T one_q = T(1) + q;
    return (one_q * one_q + one_q * eps3) * c1 + T(1) + one_q / eps3;
}

template <class T>
T delta(const T& A, const T& q)
{
    return A / (T(4) * (T(1) + q) * (T(1) + q));
}

template <class T>
T c0_cmc(const T& A, const T& q)
{
    const T sq = (T(1) + q) * (T(1) + q);
    const T d1 = T(1) + delta(A, q);
    return T(4) * d1 * sq / A + T(16) * sq * (T(1) + d1 * d1 * sq) / (A * A);
}

template <class T>
T b0_raw(int n, const T& A, const T& q)
{
    const T sq = (T(1) + q) * (T(1) + q);
    const T nn = T(n);
    const T nm2 = T(n - 2);
    return T(4) * nn * nm2 * nm2 * sq / (T(n - 1) * A * A) - T(8) * nn / A - nn / sq;
}

template <class T>
struct CmcTerms {
    T left;   // coefficient of the gradient integral after absorption
    T c0;
    T b0_raw;
};

template <class T>
CmcTerms<T> cmc_general(int n, const T& q, const T& eps1, const T& eps2, const T& eps3)
{
    const T sq = (T(1) + q) * (T(1) + q);
    const T nn = T(n);
    const T nm2 = T(n - 2);
    const T left = T(2) / nn + T(2) * q + T(1) - eps1 - (T(1) + eps3) * sq * (T(1) + eps2);
    const T rhs_f = sq / eps1 + (T(1) + eps3) * sq * (T(1) + T(1) / eps2);
    const T rhs_k = nn * nm2 * nm2 / (T(4) * T(n - 1) * eps3) - T(2) * nn - nn * eps3;
    return {left, rhs_f / left, rhs_k / left};
}

template <class T>
T closure_a(const T& q, const T& c0)
{
    return T(2) * (T(1) + q) * (T(1) + q) * (c0 + T(1));
}

template <class T>
T closure_b_raw(int n, const T& q, const T& b0)
{
    return T(2) * (T(1) + q) * (T(1) + q) * b0 - T(n);
}

} // namespace ssy::detail
