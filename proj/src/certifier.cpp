#include "ssy/certifier.hpp"

#include "ssy/errors.hpp"
#include "ssy/minimal_constants.hpp"
#include "ssy/param_domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ssy {

namespace {

constexpr double kLn2Lo = 0.69314718055994529;  // nearest double to ln 2, widened below

Interval ln2()
{
    return {round_down(kLn2Lo, 1), round_up(kLn2Lo, 1)};
}

// 2/n - x^2 from exact pieces: 2/n = r + rem/n and x^2 = h + l, so only the
// small terms are rounded.
Interval gap_at(int n, double x)
{
    const double nd = n;
    const double r = 2.0 / nd;
    const Interval tail = Interval(std::fma(-r, nd, 2.0)) / Interval(nd);
    const double h = x * x;
    if (h < 0x1p-960) {
        return Interval(r) + tail - sqr(Interval(x));
    }
    return Interval(r) - Interval(h) + tail - Interval(std::fma(x, x, -h));
}

Interval gap_of(int n, const Interval& q)
{
    if (q.lo() < 0.0) {
        throw DomainError("q-range must be nonnegative: " + q.to_string());
    }
    return {gap_at(n, q.hi()).lo(), gap_at(n, q.lo()).hi()};
}

Interval positive_gap(int n, const Interval& q)
{
    const Interval A = gap_of(n, q);
    if (!(A.lo() > 0.0)) {
        throw DomainError("box may touch the singular set A(n,q) <= 0 for n = " + std::to_string(n) +
                          ", q in " + q.to_string());
    }
    return A;
}

void require_unit_range(const Interval& q)
{
    if (!(q.lo() > 0.0 && q.hi() < 1.0)) {
        throw DomainError("function defined on 0 < q < 1 only, got q in " + q.to_string());
    }
}

Interval c1_of(int n, const Interval& q)
{
    const Interval A = positive_gap(n, q);
    const Interval B = sqr(Interval(1.0) + q) + Interval(1.0);
    return Interval(2.0) / A + Interval(8.0) * B / sqr(A);
}

Interval c_young_of(int n, const Interval& q)
{
    const Interval one_q = Interval(1.0) + q;
    const Interval c3 = (Interval(2.0) + q) * (one_q * c1_of(n, q) + Interval(1.0));
    return exp(one_q * (ln2() - log1p(q) + log(c3)) + xlogx(q));
}

Interval c_holder_of(int n, const Interval& q)
{
    const Interval sq = sqr(Interval(1.0) + q);
    const Interval c3h = Interval(2.0) * sq * (sq * c1_of(n, q) + Interval(1.0));
    return exp((Interval(1.0) + q) * log(c3h));
}

// q^(q/(1+q)), continuous at q = 0.
Interval pow_self_scaled(const Interval& q)
{
    return exp(xlogx(q) / (Interval(1.0) + q));
}

Interval f_bound_of(const Interval& q)
{
    require_unit_range(q);
    return sqr(sqr(Interval(1.0) + q)) / (pow_self_scaled(q) * (Interval(2.0) + q));
}

Interval g_prime_of(const Interval& q)
{
    require_unit_range(q);
    const Interval one_q = Interval(1.0) + q;
    return Interval(3.0) / one_q - Interval(1.0) / (Interval(2.0) + q) - log(q) / sqr(one_q);
}

Interval ratio_root_of(int n, const Interval& q)
{
    const Interval one_q = Interval(1.0) + q;
    // D = 1 + (1+q) C1, so (D-1)/D = 1 - 1/D.
    const Interval D = Interval(1.0) + one_q * c1_of(n, q);
    const Interval lead = sqr(one_q) * one_q / (pow_self_scaled(q) * (Interval(2.0) + q));
    return lead * (Interval(1.0) + q * (Interval(1.0) - Interval(1.0) / D));
}

int certified_sign(const Interval& x)
{
    if (x.lo() > 0.0) {
        return 1;
    }
    if (x.hi() < 0.0) {
        return -1;
    }
    return 0;
}

int point_sign(ClaimFunction fn, int n, double q)
{
    try {
        return certified_sign(interval_eval(fn, n, Interval(q)));
    } catch (const DomainError&) {
        return 0;
    }
}

BoxOutcome evaluate_box(const Claim& claim, const PendingBox& box)
{
    BoxOutcome out{BoxKind::DomainError, std::nullopt, std::nullopt};
    try {
        const Interval enc = interval_eval(claim, box.n, Interval(box.q_lo, box.q_hi));
        out.enclosure = enc;
        out.kind = enc.lo() > 0.0 ? BoxKind::Positive : enc.hi() < 0.0 ? BoxKind::Negative : BoxKind::Straddles;
    } catch (const DomainError&) {
        out.kind = BoxKind::DomainError;
        if (box.q_lo > 0.0) {
            try {
                interval_eval(claim, box.n, Interval(box.q_lo));
            } catch (const DomainError&) {
                out.outside_domain = true;
            }
        }
    }
    if (out.kind != BoxKind::Positive) {
        const double mid = box.q_lo + (box.q_hi - box.q_lo) / 2.0;
        try {
            out.midpoint_enclosure = interval_eval(claim, box.n, Interval(mid));
        } catch (const DomainError&) {
            out.midpoint_enclosure.reset();
        }
    }
    return out;
}

} // namespace

const char* to_string(ClaimFunction fn)
{
    switch (fn) {
    case ClaimFunction::Gap:
        return "gap";
    case ClaimFunction::GPrime:
        return "g-prime";
    case ClaimFunction::FBound:
        return "f-bound";
    case ClaimFunction::FMinusOne:
        return "f-minus-one";
    case ClaimFunction::CYoung:
        return "c-young";
    case ClaimFunction::CHolder:
        return "c-holder";
    case ClaimFunction::YoungMinusHolder:
        return "young-minus-holder";
    case ClaimFunction::RatioRoot:
        return "ratio-root";
    case ClaimFunction::FMinusRatioRoot:
        return "f-minus-ratio-root";
    case ClaimFunction::One:
        return "one";
    }
    return "unknown";
}

const std::vector<ClaimFunction>& registered_functions()
{
    static const std::vector<ClaimFunction> all{
        ClaimFunction::Gap,         ClaimFunction::GPrime,    ClaimFunction::FBound,
        ClaimFunction::FMinusOne,   ClaimFunction::CYoung,    ClaimFunction::CHolder,
        ClaimFunction::YoungMinusHolder, ClaimFunction::RatioRoot, ClaimFunction::FMinusRatioRoot,
        ClaimFunction::One,
    };
    return all;
}

ClaimFunction parse_claim_function(const std::string& name)
{
    for (const auto fn : registered_functions()) {
        if (name == to_string(fn)) {
            return fn;
        }
    }
    throw std::invalid_argument("unknown claim function '" + name + "'");
}

const char* to_string(CertStatus status)
{
    switch (status) {
    case CertStatus::Proven:
        return "Proven";
    case CertStatus::Disproven:
        return "Disproven";
    case CertStatus::Inconclusive:
        return "Inconclusive";
    }
    return "unknown";
}

Interval interval_eval(ClaimFunction fn, int n, const Interval& q)
{
    require_dimension(n);
    switch (fn) {
    case ClaimFunction::Gap:
        return gap_of(n, q);
    case ClaimFunction::GPrime:
        return g_prime_of(q);
    case ClaimFunction::FBound:
        return f_bound_of(q);
    case ClaimFunction::FMinusOne:
        return f_bound_of(q) - Interval(1.0);
    case ClaimFunction::CYoung:
        return c_young_of(n, q);
    case ClaimFunction::CHolder:
        return c_holder_of(n, q);
    case ClaimFunction::YoungMinusHolder:
        return c_young_of(n, q) - c_holder_of(n, q);
    case ClaimFunction::RatioRoot:
        return ratio_root_of(n, q);
    case ClaimFunction::FMinusRatioRoot:
        return f_bound_of(q) - ratio_root_of(n, q);
    case ClaimFunction::One:
        return Interval(1.0);
    }
    throw std::invalid_argument("unregistered claim function");
}

Interval interval_eval(ClaimFunction fn, const ParamBox& box)
{
    if (box.n_values.empty()) {
        throw std::invalid_argument("parameter box has an empty dimension set");
    }
    const Interval q(box.q_lo, box.q_hi);
    Interval out = interval_eval(fn, box.n_values.front(), q);
    for (std::size_t i = 1; i < box.n_values.size(); ++i) {
        out = hull(out, interval_eval(fn, box.n_values[i], q));
    }
    return out;
}

double point_eval(ClaimFunction fn, int n, double q)
{
    const ParamPoint p{n, q};
    switch (fn) {
    case ClaimFunction::Gap:
        return stability_gap(p);
    case ClaimFunction::GPrime:
        return g_prime(q);
    case ClaimFunction::FBound:
        return f_bound(q);
    case ClaimFunction::FMinusOne:
        return f_bound(q) - 1.0;
    case ClaimFunction::CYoung:
        return c_young(p);
    case ClaimFunction::CHolder:
        return c_holder(p);
    case ClaimFunction::YoungMinusHolder:
        return c_young(p) - c_holder(p);
    case ClaimFunction::RatioRoot:
        return ratio_root(p);
    case ClaimFunction::FMinusRatioRoot:
        return f_bound(q) - ratio_root(p);
    case ClaimFunction::One:
        return 1.0;
    }
    throw std::invalid_argument("unregistered claim function");
}

Interval interval_eval(const Claim& claim, int n, const Interval& q)
{
    const Interval plus = interval_eval(claim.plus, n, q);
    if (!claim.minus) {
        return plus;
    }
    return plus - interval_eval(*claim.minus, n, q);
}

std::vector<BoxOutcome> evaluate_boxes(const Claim& claim, const std::vector<PendingBox>& boxes,
                                       Execution execution)
{
    std::vector<BoxOutcome> out(boxes.size(), BoxOutcome{BoxKind::DomainError, std::nullopt, std::nullopt});
    const auto count = static_cast<std::ptrdiff_t>(boxes.size());
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            out[i] = evaluate_box(claim, boxes[i]);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            out[i] = evaluate_box(claim, boxes[i]);
        }
    }
    return out;
}

Certificate certify(const Claim& claim, const ParamBox& box, const CertifyOptions& options)
{
    Certificate cert{claim.id, box, CertStatus::Inconclusive, std::nullopt, 0, 0, 0, 0, {}};
    if (box.n_values.empty() || !(box.q_lo <= box.q_hi)) {
        cert.diagnostics = "empty parameter box";
        return cert;
    }

    std::vector<PendingBox> level;
    for (const int n : box.n_values) {
        double hi = box.q_hi;
        if (options.clip_to_domain) {
            hi = std::min(hi, std::sqrt(2.0 / n) * (1.0 - kBoundaryMargin));
            if (!(box.q_lo <= hi)) {
                continue;
            }
        }
        level.push_back({n, box.q_lo, hi, 0});
    }
    if (level.empty()) {
        cert.diagnostics = "no dimension has a nonempty admissible q-range";
        return cert;
    }

    bool unresolved = false;
    std::vector<PendingBox> next;
    while (!level.empty()) {
        const auto outcomes = evaluate_boxes(claim, level, options.execution);
        next.clear();
        // Ordered, serial aggregation: results do not depend on the schedule.
        for (std::size_t i = 0; i < level.size(); ++i) {
            const PendingBox& b = level[i];
            const BoxOutcome& o = outcomes[i];
            cert.max_depth_reached = std::max(cert.max_depth_reached, b.depth);
            if (o.kind == BoxKind::Positive) {
                ++cert.leaves;
                continue;
            }
            if (o.kind == BoxKind::DomainError) {
                ++cert.domain_error_boxes;
            }
            if (!cert.witness && o.midpoint_enclosure && o.midpoint_enclosure->hi() < 0.0) {
                const double mid = b.q_lo + (b.q_hi - b.q_lo) / 2.0;
                cert.witness = Witness{b.n, mid, *o.midpoint_enclosure};
            }
            const double mid = b.q_lo + (b.q_hi - b.q_lo) / 2.0;
            if (o.outside_domain || b.depth >= options.max_depth || mid <= b.q_lo || mid >= b.q_hi) {
                ++cert.leaves;
                unresolved = true;
                continue;
            }
            next.push_back({b.n, b.q_lo, mid, b.depth + 1});
            next.push_back({b.n, mid, b.q_hi, b.depth + 1});
            ++cert.subdivisions;
        }
        if (cert.witness) {
            break;
        }
        if (next.size() > options.max_boxes_per_level) {
            unresolved = true;
            cert.diagnostics = "box budget exhausted";
            break;
        }
        level.swap(next);
    }

    if (cert.witness) {
        cert.status = CertStatus::Disproven;
    } else if (unresolved) {
        cert.status = CertStatus::Inconclusive;
        if (cert.diagnostics.empty()) {
            cert.diagnostics = "depth budget exhausted";
        }
        if (cert.domain_error_boxes > 0) {
            cert.diagnostics += "; " + std::to_string(cert.domain_error_boxes) +
                                " boxes touched the singular set A(n,q) <= 0";
        }
    } else {
        cert.status = CertStatus::Proven;
    }
    return cert;
}

Certificate certify_positive(ClaimFunction fn, const ParamBox& box, const CertifyOptions& options)
{
    return certify(Claim{std::string(to_string(fn)) + " > 0", fn, std::nullopt}, box, options);
}

Certificate certify_less(ClaimFunction fn_a, ClaimFunction fn_b, const ParamBox& box,
                         const CertifyOptions& options)
{
    return certify(Claim{std::string(to_string(fn_a)) + " < " + to_string(fn_b), fn_b, fn_a}, box, options);
}

Interval isolate_root(ClaimFunction fn, int n, const Interval& bracket, double tol)
{
    if (!(tol > 0.0)) {
        throw PreconditionError("isolate_root needs a positive tolerance");
    }
    double lo = bracket.lo();
    double hi = bracket.hi();
    const int s_lo = point_sign(fn, n, lo);
    const int s_hi = point_sign(fn, n, hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
        std::ostringstream msg;
        msg << "isolate_root: endpoint signs of " << to_string(fn) << " on " << bracket.to_string()
            << " are not certified opposite";
        throw PreconditionError(msg.str());
    }
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2.0;
        const int s = point_sign(fn, n, mid);
        if (s == s_lo) {
            lo = mid;
            continue;
        }
        if (s == s_hi) {
            hi = mid;
            continue;
        }
        // The sign at mid is not certified: the root is within rounding
        // distance. Step outward until both sides are certified.
        for (double step = tol / 8.0; step <= tol / 2.0; step *= 2.0) {
            const double a = std::max(lo, mid - step);
            const double b = std::min(hi, mid + step);
            if (point_sign(fn, n, a) == s_lo && point_sign(fn, n, b) == s_hi) {
                return {a, b};
            }
        }
        throw PreconditionError("isolate_root: sign not certifiable within the requested tolerance");
    }
    return {lo, hi};
}

const std::vector<NamedClaim>& named_claims()
{
    static const std::vector<NamedClaim> claims{
        {"holder-beats-young", "C_H(n,q) < C_Y(n,q)",
         {"holder-beats-young", ClaimFunction::CYoung, ClaimFunction::CHolder}, true},
        {"gap-positive", "A(n,q) = 2/n - q^2 > 0", {"gap-positive", ClaimFunction::Gap, std::nullopt}, false},
        {"f-monotone", "g'(q) > 0, i.e. f is strictly increasing",
         {"f-monotone", ClaimFunction::GPrime, std::nullopt}, false},
        {"f-below-one", "f(q) < 1", {"f-below-one", ClaimFunction::One, ClaimFunction::FBound}, false},
        {"ratio-below-f", "(C_H/C_Y)^(1/(1+q)) < f(q)",
         {"ratio-below-f", ClaimFunction::FBound, ClaimFunction::RatioRoot}, true},
    };
    return claims;
}

const NamedClaim& find_named_claim(const std::string& name)
{
    for (const auto& c : named_claims()) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown claim '" + name + "'");
}

} // namespace ssy
