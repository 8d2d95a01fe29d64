#include "ssy/cmc_constants.hpp"

#include "ssy/detail/formulas.hpp"
#include "ssy/detail/power.hpp"
#include "ssy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ssy {

void CmcScale::validate() const
{
    std::ostringstream msg;
    if (!std::isfinite(H)) {
        msg << "mean curvature H must be finite, got " << H;
    } else if (!(R > 0.0) || !std::isfinite(R)) {
        msg << "ball radius R must be positive and finite, got " << R;
    } else if (!(theta > 0.0 && theta < 1.0)) {
        msg << "interior fraction theta must lie in (0, 1), got " << theta;
    } else {
        return;
    }
    throw DomainError(msg.str());
}

const char* to_string(Regime regime)
{
    switch (regime) {
    case Regime::MinimalLike:
        return "MinimalLike";
    case Regime::CurvatureDominated:
        return "CurvatureDominated";
    }
    return "unknown";
}

namespace {

using detail::Wide;

struct CmcWide {
    Wide delta, C0, B0_raw, B0, a, b, calC1, calC2;
};

CmcWide cmc_wide(const ParamPoint& p)
{
    require_positive_gap(p);
    const Wide A = detail::gap_wide(p.n, p.q);
    const Wide q = p.q;
    const Wide c0 = detail::c0_cmc(A, q);
    const Wide raw = detail::b0_raw(p.n, A, q);
    const Wide b0 = std::max(Wide(0), raw);
    const Wide a = detail::closure_a(q, c0);
    const Wide b = std::max(Wide(0), detail::closure_b_raw(p.n, q, b0));
    const Wide scale = std::pow(Wide(2), q);
    const Wide c1 = scale * detail::pow_one_plus(a, q);
    const Wide c2 = b > 0 ? scale * detail::pow_one_plus(b, q) : Wide(0);
    return {detail::delta(A, q), c0, raw, b0, a, b, c1, c2};
}

} // namespace

double delta_param(const ParamPoint& p)
{
    return static_cast<double>(cmc_wide(p).delta);
}

double c0_cmc(const ParamPoint& p)
{
    return static_cast<double>(cmc_wide(p).C0);
}

double b0_raw(const ParamPoint& p)
{
    return static_cast<double>(cmc_wide(p).B0_raw);
}

double b0_cmc(const ParamPoint& p)
{
    return static_cast<double>(cmc_wide(p).B0);
}

ClosureCoefficients closure_coefficients(const ParamPoint& p)
{
    const auto w = cmc_wide(p);
    return {static_cast<double>(w.a), static_cast<double>(w.b)};
}

CalConstants cal_constants(const ParamPoint& p)
{
    const auto w = cmc_wide(p);
    return {static_cast<double>(w.calC1), static_cast<double>(w.calC2)};
}

CmcConstantBundle cmc_bundle(const ParamPoint& p)
{
    const auto w = cmc_wide(p);
    const auto d = [](Wide x) { return static_cast<double>(x); };
    return {p, d(w.delta), d(w.C0), d(w.B0), d(w.B0_raw), d(w.a), d(w.b), d(w.calC1), d(w.calC2)};
}

namespace {

// x^(2+2q)
double sqr_pow_one_plus(double x, double q)
{
    const double r = detail::pow_one_plus(x, q);
    return r * r;
}

} // namespace

LocalEstimate local_estimate(const ParamPoint& p, const CmcScale& scale)
{
    scale.validate();
    const auto cal = cal_constants(p);
    const double width = (1.0 - scale.theta) * scale.R;
    const double width_root = detail::pow_one_plus(width, p.q);
    const double inv_width_pow = 1.0 / (width_root * width_root);
    const double abs_h = std::abs(scale.H);

    LocalEstimate out{};
    out.gradient_coefficient = cal.calC1 * inv_width_pow;
    // |H|^e is formed as (|H| w)^e / w^e so that |H| w <= 1 implies the
    // curvature term is bounded by calC2 / w^e in floating point as well.
    const double scaled_h = abs_h * width;
    out.curvature_coefficient = abs_h == 0.0 ? 0.0 : cal.calC2 * sqr_pow_one_plus(scaled_h, p.q) * inv_width_pow;
    out.combined_small_scale = (cal.calC1 + cal.calC2) * inv_width_pow;
    out.regime = scaled_h <= 1.0 ? Regime::MinimalLike : Regime::CurvatureDominated;
    return out;
}

double threshold_radius(double H, double theta)
{
    if (!(theta > 0.0 && theta < 1.0)) {
        throw DomainError("interior fraction theta must lie in (0, 1)");
    }
    if (H == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / (std::abs(H) * (1.0 - theta));
}

} // namespace ssy
