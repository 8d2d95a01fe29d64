#include "ssy/epsilon_optimizer.hpp"

#include "ssy/cmc_constants.hpp"
#include "ssy/detail/formulas.hpp"
#include "ssy/detail/power.hpp"
#include "ssy/errors.hpp"
#include "ssy/minimal_constants.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ssy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool positive(double x)
{
    return x > 0.0 && std::isfinite(x);
}

using detail::Wide;

Wide calc_from_closure(Wide q, Wide coefficient)
{
    return coefficient > 0 ? std::pow(Wide(2), q) * detail::pow_one_plus(coefficient, q) : Wide(0);
}

Wide terminal_wide(Wide q, Wide c3, Wide lambda)
{
    return detail::pow_one_plus(c3, q) * detail::pow_self_wide(q) /
           (detail::pow_one_plus(1 + q, q) * std::pow(lambda, q) * (1 - lambda));
}

bool feasible_pair(Wide A, double e1, double e2)
{
    return positive(e1) && positive(e2) && A - e1 - e2 > 0;
}

double young_objective(const ParamPoint& p, Wide A, std::span<const double> x)
{
    const double e1 = x[0], e2 = x[1], e3 = x[2], lambda = x[3];
    if (!feasible_pair(A, e1, e2) || !positive(e3) || !(lambda > 0.0 && lambda < 1.0)) {
        return kInf;
    }
    const Wide q = p.q;
    const Wide c1 = detail::c1_general<Wide>(A, q, e1, e2);
    const Wide c3 = detail::c3_general<Wide>(q, c1, e3);
    return static_cast<double>(terminal_wide(q, c3, lambda));
}

double holder_objective(const ParamPoint& p, Wide A, std::span<const double> x)
{
    const double e1 = x[0], e2 = x[1];
    if (!feasible_pair(A, e1, e2)) {
        return kInf;
    }
    const Wide q = p.q;
    const Wide c1 = detail::c1_general<Wide>(A, q, e1, e2);
    return static_cast<double>(detail::pow_one_plus(detail::c3_holder(q, c1), q));
}

double cmc_objective(const ParamPoint& p, std::span<const double> x, double weight)
{
    if (!positive(x[0]) || !positive(x[1]) || !positive(x[2])) {
        return kInf;
    }
    const Wide q = p.q;
    const auto terms = detail::cmc_general<Wide>(p.n, q, x[0], x[1], x[2]);
    if (!(terms.left > 0)) {
        return kInf;
    }
    Wide value = calc_from_closure(q, detail::closure_a(q, terms.c0));
    if (weight != 0.0) {
        const Wide b0 = std::max(Wide(0), terms.b0_raw);
        const Wide b = std::max(Wide(0), detail::closure_b_raw(p.n, q, b0));
        value += Wide(weight) * calc_from_closure(q, b);
    }
    return static_cast<double>(value);
}

// Coordinates in which the simplex moves: log for positive parameters, logit
// for the absorption fraction.
bool is_fraction_axis(Target target, std::size_t axis)
{
    return target == Target::YoungCY && axis == 3;
}

std::vector<double> to_search_space(Target target, std::span<const double> x)
{
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = is_fraction_axis(target, i) ? std::log(x[i] / (1.0 - x[i])) : std::log(x[i]);
    }
    return y;
}

std::vector<double> from_search_space(Target target, std::span<const double> y)
{
    std::vector<double> x(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        x[i] = is_fraction_axis(target, i) ? 1.0 / (1.0 + std::exp(-y[i])) : std::exp(y[i]);
    }
    return x;
}

// Log-spaced points covering (upper * 1e-3, upper) for bounded axes, or
// (1e-3, 1e3) for unbounded ones.
std::vector<double> log_axis(double lower, double upper, int points)
{
    std::vector<double> axis(points);
    const double span = std::log10(upper / lower);
    for (int k = 0; k < points; ++k) {
        axis[k] = lower * std::pow(10.0, span * (k + 0.5) / points);
    }
    return axis;
}

std::vector<double> unit_axis(int points)
{
    std::vector<double> axis(points);
    for (int k = 0; k < points; ++k) {
        axis[k] = (k + 0.5) / points;
    }
    return axis;
}

struct Candidate {
    double value = kInf;
    std::size_t index = std::numeric_limits<std::size_t>::max();

    // Smaller value wins; ties go to the lexicographically smaller vector,
    // which is the smaller flat index because axes are increasing.
    [[nodiscard]] bool better_than(const Candidate& other) const
    {
        return value < other.value || (value == other.value && index < other.index);
    }
};

std::vector<double> grid_point(const std::vector<std::vector<double>>& axes, std::size_t index)
{
    std::vector<double> x(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
        x[d] = axes[d][index % axes[d].size()];
        index /= axes[d].size();
    }
    return x;
}

// The Young grid dominates the seeding cost. Its innermost axis is lambda,
// so C3^(1+q) is shared by a whole run of points and lambda^q by every run.
// The arithmetic matches terminal_wide operation for operation, so values
// are identical to objective().
Candidate scan_young(const ParamPoint& p, const std::vector<std::vector<double>>& axes, std::size_t begin,
                     std::size_t end)
{
    const Wide A = detail::gap_wide(p.n, p.q);
    const Wide q = p.q;
    const Wide self = detail::pow_self_wide(q);
    const Wide lead = detail::pow_one_plus(1 + q, q);
    const auto& lambdas = axes[3];
    const std::size_t nl = lambdas.size();
    std::vector<Wide> lambda_pow(nl);
    for (std::size_t k = 0; k < nl; ++k) {
        lambda_pow[k] = std::pow(Wide(lambdas[k]), q);
    }

    Candidate best;
    std::size_t run = std::numeric_limits<std::size_t>::max();
    bool feasible = false;
    Wide numerator = 0;
    for (std::size_t i = begin; i < end; ++i) {
        if (i / nl != run) {
            run = i / nl;
            std::size_t rest = run;
            const double e3 = axes[2][rest % axes[2].size()];
            rest /= axes[2].size();
            const double e2 = axes[1][rest % axes[1].size()];
            rest /= axes[1].size();
            const double e1 = axes[0][rest];
            feasible = feasible_pair(A, e1, e2) && positive(e3);
            if (feasible) {
                const Wide c1 = detail::c1_general<Wide>(A, q, e1, e2);
                const Wide c3 = detail::c3_general<Wide>(q, c1, e3);
                numerator = detail::pow_one_plus(c3, q) * self;
            }
        }
        const std::size_t k = i % nl;
        const double lambda = lambdas[k];
        double value = kInf;
        if (feasible && lambda > 0.0 && lambda < 1.0) {
            value = static_cast<double>(numerator / (lead * lambda_pow[k] * (1 - Wide(lambda))));
        }
        const Candidate c{value, i};
        if (c.better_than(best)) {
            best = c;
        }
    }
    return best;
}

Candidate scan_range(Target target, const ParamPoint& p, const std::vector<std::vector<double>>& axes,
                     double weight, std::size_t begin, std::size_t end)
{
    if (target == Target::YoungCY) {
        return scan_young(p, axes, begin, end);
    }
    Candidate best;
    std::vector<double> x(axes.size());
    for (std::size_t i = begin; i < end; ++i) {
        std::size_t rest = i;
        for (std::size_t d = axes.size(); d-- > 0;) {
            x[d] = axes[d][rest % axes[d].size()];
            rest /= axes[d].size();
        }
        const Candidate c{objective(target, p, x, weight), i};
        if (c.better_than(best)) {
            best = c;
        }
    }
    return best;
}

Candidate scan_serial(Target target, const ParamPoint& p, const std::vector<std::vector<double>>& axes,
                      double weight, std::size_t total)
{
    return scan_range(target, p, axes, weight, 0, total);
}

Candidate scan_parallel(Target target, const ParamPoint& p, const std::vector<std::vector<double>>& axes,
                        double weight, std::size_t total)
{
    // Rows of the first axis are independent chunks; each thread keeps its own
    // best and the reduction uses the same total order as the serial scan.
    const std::size_t rows = axes.front().size();
    const std::size_t row_len = total / rows;
    Candidate best;
#pragma omp parallel
    {
        Candidate local;
#pragma omp for schedule(static)
        for (std::size_t r = 0; r < rows; ++r) {
            const Candidate c = scan_range(target, p, axes, weight, r * row_len, (r + 1) * row_len);
            if (c.better_than(local)) {
                local = c;
            }
        }
#pragma omp critical(ssy_grid_seed)
        {
            if (local.better_than(best)) {
                best = local;
            }
        }
    }
    return best;
}

struct Simplex {
    std::vector<std::vector<double>> vertices;
    std::vector<double> values;
};

// Nelder-Mead in search coordinates with standard coefficients.
struct SimplexRun {
    std::vector<double> best;
    double value;
    std::size_t evaluations;
    bool converged;
};

template <class Fn>
SimplexRun nelder_mead(Fn&& fn, const std::vector<double>& start, double step, int max_iterations,
                       double rel_tol)
{
    const std::size_t dim = start.size();
    Simplex s;
    s.vertices.push_back(start);
    for (std::size_t i = 0; i < dim; ++i) {
        auto v = start;
        v[i] += step;
        s.vertices.push_back(std::move(v));
    }
    std::size_t evals = 0;
    for (const auto& v : s.vertices) {
        s.values.push_back(fn(v));
        ++evals;
    }

    std::vector<std::size_t> order(dim + 1);
    bool converged = false;
    for (int iter = 0; iter < max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return s.values[a] < s.values[b]; });
        const std::size_t ib = order.front();
        const std::size_t iw = order.back();
        const std::size_t isw = order[dim - 1];
        const double fb = s.values[ib];
        const double fw = s.values[iw];
        if (std::isfinite(fw) && fw - fb <= rel_tol * std::abs(fb)) {
            converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == iw) {
                continue;
            }
            for (std::size_t i = 0; i < dim; ++i) {
                centroid[i] += s.vertices[k][i] / static_cast<double>(dim);
            }
        }
        auto along = [&](double t) {
            std::vector<double> v(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                v[i] = centroid[i] + t * (s.vertices[iw][i] - centroid[i]);
            }
            return v;
        };

        auto reflected = along(-1.0);
        const double fr = fn(reflected);
        ++evals;
        if (fr < fb) {
            auto expanded = along(-2.0);
            const double fe = fn(expanded);
            ++evals;
            if (fe < fr) {
                s.vertices[iw] = std::move(expanded);
                s.values[iw] = fe;
            } else {
                s.vertices[iw] = std::move(reflected);
                s.values[iw] = fr;
            }
            continue;
        }
        if (fr < s.values[isw]) {
            s.vertices[iw] = std::move(reflected);
            s.values[iw] = fr;
            continue;
        }
        const bool outside = fr < fw;
        auto contracted = along(outside ? -0.5 : 0.5);
        const double fc = fn(contracted);
        ++evals;
        if (outside ? fc <= fr : fc < fw) {
            s.vertices[iw] = std::move(contracted);
            s.values[iw] = fc;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == ib) {
                continue;
            }
            for (std::size_t i = 0; i < dim; ++i) {
                s.vertices[k][i] = s.vertices[ib][i] + 0.5 * (s.vertices[k][i] - s.vertices[ib][i]);
            }
            s.values[k] = fn(s.vertices[k]);
            ++evals;
        }
    }

    const auto best = static_cast<std::size_t>(
        std::min_element(s.values.begin(), s.values.end()) - s.values.begin());
    return {s.vertices[best], s.values[best], evals, converged};
}

} // namespace

const char* to_string(Target target)
{
    switch (target) {
    case Target::YoungCY:
        return "young";
    case Target::HolderCH:
        return "holder";
    case Target::CmcCalC1:
        return "cmc";
    }
    return "unknown";
}

Target parse_target(const std::string& name)
{
    if (name == "young" || name == "YoungC_Y") {
        return Target::YoungCY;
    }
    if (name == "holder" || name == "HolderC_H") {
        return Target::HolderCH;
    }
    if (name == "cmc" || name == "CmcCalC1") {
        return Target::CmcCalC1;
    }
    throw std::invalid_argument("unknown optimization target '" + name + "' (expected young, holder or cmc)");
}

std::size_t parameter_count(Target target)
{
    switch (target) {
    case Target::YoungCY:
        return 4;
    case Target::HolderCH:
        return 2;
    case Target::CmcCalC1:
        return 3;
    }
    return 0;
}

double c1_general(const ParamPoint& p, double eps1, double eps2)
{
    require_positive_gap(p);
    const Wide A = detail::gap_wide(p.n, p.q);
    if (!feasible_pair(A, eps1, eps2)) {
        throw FeasibilityError("c1_general requires eps1, eps2 > 0 and eps1 + eps2 < A(n,q)");
    }
    return static_cast<double>(detail::c1_general<Wide>(A, p.q, eps1, eps2));
}

double c3_general(const ParamPoint& p, double c1, double eps3)
{
    if (!positive(eps3)) {
        throw FeasibilityError("c3_general requires eps3 > 0");
    }
    if (!positive(c1)) {
        throw FeasibilityError("c3_general requires C1 > 0");
    }
    return static_cast<double>(detail::c3_general<Wide>(p.q, c1, eps3));
}

double young_terminal_general(double q, double c3, double lambda)
{
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw FeasibilityError("absorption fraction lambda must lie in (0, 1)");
    }
    if (!positive(c3)) {
        throw FeasibilityError("young_terminal_general requires C3 > 0");
    }
    if (!(q >= 0.0) || !std::isfinite(q)) {
        throw DomainError("young_terminal_general requires q >= 0");
    }
    return static_cast<double>(terminal_wide(q, c3, lambda));
}

double c_holder_general(const ParamPoint& p, double eps1, double eps2)
{
    require_positive_gap(p);
    const Wide A = detail::gap_wide(p.n, p.q);
    if (!feasible_pair(A, eps1, eps2)) {
        throw FeasibilityError("c_holder_general requires eps1, eps2 > 0 and eps1 + eps2 < A(n,q)");
    }
    const Wide q = p.q;
    return static_cast<double>(detail::pow_one_plus(detail::c3_holder(q, detail::c1_general<Wide>(A, q, eps1, eps2)), q));
}

CmcGeneral cmc_general(const ParamPoint& p, const CmcEpsilons& eps)
{
    if (!positive(eps.eps1) || !positive(eps.eps2) || !positive(eps.eps3)) {
        throw FeasibilityError("cmc_general requires eps1, eps2, eps3 > 0");
    }
    const auto terms = detail::cmc_general<Wide>(p.n, p.q, eps.eps1, eps.eps2, eps.eps3);
    if (!(terms.left > 0)) {
        throw FeasibilityError("cmc_general: left coefficient 2/n + 2q + 1 - eps1 - (1+eps3)(1+q)^2(1+eps2) "
                               "must be positive");
    }
    return {static_cast<double>(terms.left), static_cast<double>(terms.c0), static_cast<double>(terms.b0_raw)};
}

YoungEpsilons canonical_young_epsilons(const ParamPoint& p)
{
    const double A = require_positive_gap(p);
    return {A / 4.0, A / 4.0, 1.0, 0.5};
}

CmcEpsilons canonical_cmc_epsilons(const ParamPoint& p)
{
    const double A = require_positive_gap(p);
    const double sq = (1.0 + p.q) * (1.0 + p.q);
    const double d = detail::delta(A, p.q);
    return {A / 4.0, A / (4.0 * (1.0 + d) * sq), d};
}

std::vector<double> canonical_parameters(Target target, const ParamPoint& p)
{
    switch (target) {
    case Target::YoungCY: {
        const auto e = canonical_young_epsilons(p);
        return {e.eps1, e.eps2, e.eps3, e.lambda};
    }
    case Target::HolderCH: {
        const auto e = canonical_young_epsilons(p);
        return {e.eps1, e.eps2};
    }
    case Target::CmcCalC1: {
        const auto e = canonical_cmc_epsilons(p);
        return {e.eps1, e.eps2, e.eps3};
    }
    }
    return {};
}

double objective(Target target, const ParamPoint& p, std::span<const double> params, double cmc_weight)
{
    if (params.size() != parameter_count(target)) {
        throw std::invalid_argument("objective: wrong number of parameters for target");
    }
    switch (target) {
    case Target::YoungCY:
        return young_objective(p, detail::gap_wide(p.n, p.q), params);
    case Target::HolderCH:
        return holder_objective(p, detail::gap_wide(p.n, p.q), params);
    case Target::CmcCalC1:
        return cmc_objective(p, params, cmc_weight);
    }
    return kInf;
}

std::vector<std::vector<double>> seed_axes(Target target, const ParamPoint& p, int points_per_axis)
{
    const double A = require_positive_gap(p);
    const double sq = (1.0 + p.q) * (1.0 + p.q);
    const int g = points_per_axis;
    switch (target) {
    case Target::YoungCY:
        return {log_axis(A * 1e-3, A, g), log_axis(A * 1e-3, A, g), log_axis(1e-3, 1e3, g), unit_axis(g)};
    case Target::HolderCH:
        return {log_axis(A * 1e-3, A, g), log_axis(A * 1e-3, A, g)};
    case Target::CmcCalC1:
        return {log_axis(A * 1e-3, A, g), log_axis(A * 1e-3 / sq, A / sq, g), log_axis(A * 1e-3 / sq, A / sq, g)};
    }
    return {};
}

GridSeed grid_seed(Target target, const ParamPoint& p, int points_per_axis, double cmc_weight,
                   Execution execution)
{
    if (points_per_axis < 1) {
        throw std::invalid_argument("grid_seed needs at least one point per axis");
    }
    const auto axes = seed_axes(target, p, points_per_axis);
    std::size_t total = 1;
    for (const auto& axis : axes) {
        total *= axis.size();
    }
    const Candidate best = execution == Execution::Parallel
                               ? scan_parallel(target, p, axes, cmc_weight, total)
                               : scan_serial(target, p, axes, cmc_weight, total);
    if (!std::isfinite(best.value)) {
        return {{}, kInf, total};
    }
    return {grid_point(axes, best.index), best.value, total};
}

namespace {

// One round of Brent line searches along each search coordinate, over a wide
// bracket around the incumbent. Picks up minima that sit far out along an
// axis, e.g. an infimum approached as a parameter tends to zero.
template <class Fn>
SimplexRun polish_axes(Fn&& fn, std::vector<double> x, double value)
{
    constexpr double kReach = 40.0;
    std::size_t evals = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto line = [&](double t) {
            auto y = x;
            y[i] = t;
            ++evals;
            const double v = fn(y);
            return std::isfinite(v) ? v : std::numeric_limits<double>::max();
        };
        const auto [t, v] = boost::math::tools::brent_find_minima(line, x[i] - kReach, x[i] + kReach,
                                                                   std::numeric_limits<double>::digits);
        if (v < value) {
            x[i] = t;
            value = v;
        }
    }
    return {std::move(x), value, evals, true};
}

} // namespace

OptimizationResult optimize(Target target, const ParamPoint& p, const OptimizeOptions& options)
{
    require_positive_gap(p);
    const double weight = options.cmc_weight;

    const auto canonical = canonical_parameters(target, p);
    const double paper_value = objective(target, p, canonical, weight);

    const auto seed = grid_seed(target, p, options.grid_points, weight, options.execution);
    std::vector<double> best_x = canonical;
    double best_value = paper_value;
    if (seed.value < best_value) {
        best_x = seed.params;
        best_value = seed.value;
    }
    std::size_t evaluations = seed.evaluations + 1;

    auto fn = [&](const std::vector<double>& y) {
        return objective(target, p, from_search_space(target, y), weight);
    };

    // Restart the simplex from the incumbent until a whole run stops
    // improving it.
    constexpr double kRestartStep = 0.2;
    bool converged = false;
    for (int restart = 0; restart < options.max_restarts; ++restart) {
        auto run = nelder_mead(fn, to_search_space(target, best_x), kRestartStep,
                                     options.max_iterations, options.rel_tol);
        auto polished = polish_axes(fn, run.best, run.value);
        evaluations += run.evaluations + polished.evaluations;
        if (polished.value < run.value) {
            run = std::move(polished);
        }
        const bool improved = run.value < best_value;
        const bool negligible = !improved || best_value - run.value <= options.rel_tol * std::abs(best_value);
        if (improved) {
            best_x = from_search_space(target, run.best);
            best_value = run.value;
        }
        if (negligible && run.converged) {
            converged = true;
            break;
        }
    }

    return {target, best_x, best_value, paper_value, best_value / paper_value, evaluations, converged};
}

} // namespace ssy
