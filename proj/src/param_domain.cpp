#include "ssy/param_domain.hpp"

#include "ssy/detail/formulas.hpp"
#include "ssy/detail/power.hpp"
#include "ssy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ssy {

void require_dimension(int n)
{
    if (n < 2) {
        throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
    }
}

ParamPoint::ParamPoint(int n_, double q_) : n(n_), q(q_)
{
    require_dimension(n);
    if (!std::isfinite(q) || q < 0.0) {
        std::ostringstream msg;
        msg << "stability exponent q must be finite and >= 0, got " << q;
        throw DomainError(msg.str());
    }
}

QInterval QInterval::open(double lower, double upper)
{
    if (!(lower < upper)) {
        return none();
    }
    return {lower, upper, true, true, false};
}

QInterval QInterval::closed(double lower, double upper)
{
    if (!(lower <= upper)) {
        return none();
    }
    return {lower, upper, false, false, false};
}

bool QInterval::contains(double q) const
{
    if (empty) {
        return false;
    }
    const bool above = lower_open ? q > lower : q >= lower;
    const bool below = upper_open ? q < upper : q <= upper;
    return above && below;
}

std::string QInterval::to_string() const
{
    if (empty) {
        return "empty";
    }
    std::ostringstream out;
    out.precision(17);
    out << (lower_open ? '(' : '[') << lower << ", " << upper << (upper_open ? ')' : ']');
    return out.str();
}

namespace {

struct SplitGap {
    double lead;  // exact when q^2 is close to 2/n
    double tail;
};

// 2/n as a double-double (hi + lo), q^2 split exactly with an fma. The
// leading difference is exact near the boundary (Sterbenz), so only the
// tiny tails are rounded.
SplitGap split_gap(int n, double q)
{
    const double hi = 2.0 / n;
    const double lo = std::fma(-hi, static_cast<double>(n), 2.0) / n;
    const double sq = q * q;
    const double sq_err = std::fma(q, q, -sq);
    return {hi - sq, lo - sq_err};
}

} // namespace

double stability_gap(int n, double q)
{
    const auto g = split_gap(n, q);
    return g.lead + g.tail;
}

namespace detail {

Wide gap_wide(int n, double q)
{
    const auto g = split_gap(n, q);
    return Wide(g.lead) + Wide(g.tail);
}

} // namespace detail

double quadratic_aux(double q)
{
    return detail::quadratic_aux(q);
}

double require_positive_gap(const ParamPoint& p)
{
    const double A = stability_gap(p);
    if (!(A > 0.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "q = " << p.q << " is outside the admissible domain for n = " << p.n << ": q >= sqrt(2/" << p.n
            << ") = " << std::sqrt(2.0 / p.n) << ", so A(n,q) = " << A << " <= 0";
        throw DomainError(msg.str());
    }
    return A;
}

double d_factor(const ParamPoint& p)
{
    require_positive_gap(p);
    return static_cast<double>(detail::d_factor(detail::gap_wide(p.n, p.q), detail::Wide(p.q)));
}

StructuralCoefficients structural_coefficients(int n)
{
    require_dimension(n);
    const double nd = n;
    const double okumura = (nd - 2.0) / std::sqrt(nd * (nd - 1.0));
    return {nd * okumura, okumura, 1.0 + 2.0 / nd};
}

QInterval admissible_q_domain(int n)
{
    require_dimension(n);
    return QInterval::open(0.0, std::sqrt(2.0 / n));
}

QInterval bernstein_range(int n)
{
    require_dimension(n);
    const double lower = std::max(0.0, (n - 4) / 2.0);
    return QInterval::open(lower, std::sqrt(2.0 / n));
}

double decay_exponent(const ParamPoint& p)
{
    return p.n - 4.0 - 2.0 * p.q;
}

} // namespace ssy
