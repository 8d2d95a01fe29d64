#include "ssy/minimal_constants.hpp"

#include "ssy/detail/formulas.hpp"
#include "ssy/detail/power.hpp"
#include "ssy/errors.hpp"

#include <cmath>
#include <string>

namespace ssy {

namespace {

void require_unit_interval(double q, const char* what)
{
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError(std::string(what) + " is defined for 0 < q < 1, got q = " + std::to_string(q));
    }
}

// Below this q, pow(q, q) is replaced by exp(q log q) to avoid the underflow
// corner of the library pow.
constexpr double kTinyQ = 1e-300;

} // namespace

double pow_self(double q)
{
    if (q == 0.0) {
        return 1.0;
    }
    if (q < kTinyQ) {
        return std::exp(q * std::log(q));
    }
    return std::pow(q, q);
}

double pow_self_scaled(double q)
{
    if (q == 0.0) {
        return 1.0;
    }
    if (q < kTinyQ) {
        return std::exp(q * std::log(q) / (1.0 + q));
    }
    return std::pow(q, q / (1.0 + q));
}

namespace {

using detail::Wide;

struct MinimalWide {
    Wide A, C1, C3, CY, C3H, CH;
};

MinimalWide minimal_wide(const ParamPoint& p)
{
    require_positive_gap(p);
    const Wide A = detail::gap_wide(p.n, p.q);
    const Wide q = p.q;
    const Wide c1 = detail::c1_shared(A, q);
    const Wide c3 = detail::c3_young(q, c1);
    const Wide c3h = detail::c3_holder(q, c1);
    const Wide prefactor = 2 * std::pow(Wide(2), q) * detail::pow_self_wide(q) / detail::pow_one_plus(1 + q, q);
    return {A, c1, c3, prefactor * detail::pow_one_plus(c3, q), c3h, detail::pow_one_plus(c3h, q)};
}

Wide ratio_root_wide(const ParamPoint& p)
{
    require_positive_gap(p);
    const Wide q = p.q;
    const Wide D = detail::d_factor(detail::gap_wide(p.n, p.q), q);
    const Wide one_q = 1 + q;
    const Wide lead = one_q * one_q * one_q / (detail::pow_self_scaled_wide(q) * (2 + q));
    return lead * (1 + q * (D - 1) / D);
}

} // namespace

double c1_shared(const ParamPoint& p)
{
    return static_cast<double>(minimal_wide(p).C1);
}

double c3_young(const ParamPoint& p)
{
    return static_cast<double>(minimal_wide(p).C3);
}

double c_young(const ParamPoint& p)
{
    return static_cast<double>(minimal_wide(p).CY);
}

double c3_holder(const ParamPoint& p)
{
    return static_cast<double>(minimal_wide(p).C3H);
}

double c_holder(const ParamPoint& p)
{
    return static_cast<double>(minimal_wide(p).CH);
}

double ratio_root(const ParamPoint& p)
{
    return static_cast<double>(ratio_root_wide(p));
}

double f_bound(double q)
{
    require_unit_interval(q, "f(q)");
    const Wide one_q = 1 + Wide(q);
    const Wide sq = one_q * one_q;
    return static_cast<double>(sq * sq / (detail::pow_self_scaled_wide(q) * (2 + Wide(q))));
}

double g_log(double q)
{
    require_unit_interval(q, "g(q)");
    const Wide w = q;
    return static_cast<double>(4 * std::log1p(w) - std::log(2 + w) - (w / (1 + w)) * std::log(w));
}

double g_prime(double q)
{
    require_unit_interval(q, "g'(q)");
    const Wide w = q;
    const Wide one_q = 1 + w;
    return static_cast<double>(4 / one_q - 1 / (2 + w) - std::log(w) / (one_q * one_q) - 1 / one_q);
}

ConstantBundle minimal_bundle(const ParamPoint& p)
{
    const auto m = minimal_wide(p);
    const double cy = static_cast<double>(m.CY);
    const double ch = static_cast<double>(m.CH);
    return {p,
            stability_gap(p),
            static_cast<double>(m.C1),
            static_cast<double>(m.C3),
            cy,
            static_cast<double>(m.C3H),
            ch,
            static_cast<double>(m.CH / m.CY),
            static_cast<double>(ratio_root_wide(p))};
}

QInterval crossover_q(int n)
{
    require_dimension(n);
    constexpr double start = 0.125;
    constexpr int scan_points = 1 << 14;
    const double stop = std::sqrt(2.0 / n) * (1.0 - kBoundaryMargin);
    if (!(stop > start)) {
        return QInterval::none();
    }

    // Positive while Hölder still wins.
    auto margin = [n](double q) {
        const ParamPoint p{n, q};
        return c_young(p) - c_holder(p);
    };

    double prev_q = start;
    for (int k = 1; k <= scan_points; ++k) {
        const double q = start + (stop - start) * k / scan_points;
        if (margin(q) > 0.0) {
            prev_q = q;
            continue;
        }
        // First grid point with CY - CH <= 0: bisect on [prev_q, q].
        double lo = prev_q;
        double hi = q;
        while (hi - lo > 1e-9) {
            const double mid = lo + (hi - lo) / 2.0;
            if (mid <= lo || mid >= hi) {
                break;
            }
            if (margin(mid) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return QInterval::closed(lo, hi);
    }
    return QInterval::none();
}

} // namespace ssy
