#pragma once

#include "ssy/execution.hpp"
#include "ssy/interval.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ssy {

// Functions with compiled-in interval extensions.
enum class ClaimFunction {
    Gap,              // A(n,q)
    GPrime,           // g'(q)
    FBound,           // f(q)
    FMinusOne,        // f(q) - 1
    CYoung,           // C_Y(n,q)
    CHolder,          // C_H(n,q)
    YoungMinusHolder, // C_Y(n,q) - C_H(n,q)
    RatioRoot,        // (C_H/C_Y)^(1/(1+q)), closed form
    FMinusRatioRoot,  // f(q) - ratio_root(n,q)
    One,              // constant 1
};

const char* to_string(ClaimFunction fn);
ClaimFunction parse_claim_function(const std::string& name);
const std::vector<ClaimFunction>& registered_functions();

// Parameter box: a finite set of dimensions times a closed q-range. The
// dimension is never subdivided; certification iterates over the set.
struct ParamBox {
    std::vector<int> n_values;
    double q_lo;
    double q_hi;
};

// Sound enclosure of fn over {n} x q. Throws DomainError when the box may
// touch the singular set (A <= 0) or leaves the function's domain.
Interval interval_eval(ClaimFunction fn, int n, const Interval& q);

// Hull of the enclosures over every n in the box.
Interval interval_eval(ClaimFunction fn, const ParamBox& box);

// Plain binary64 evaluation through the constants library.
double point_eval(ClaimFunction fn, int n, double q);

enum class CertStatus { Proven, Disproven, Inconclusive };

const char* to_string(CertStatus status);

struct Witness {
    int n;
    double q;
    Interval enclosure;  // guaranteed enclosure of the claim function at (n, q); hi < 0
};

struct Certificate {
    std::string claim;
    ParamBox box;
    CertStatus status;
    std::optional<Witness> witness;
    std::size_t subdivisions;
    int max_depth_reached;
    std::size_t leaves;
    std::size_t domain_error_boxes;  // boxes whose evaluation hit the singular set
    std::string diagnostics;
};

struct CertifyOptions {
    int max_depth = 40;
    Execution execution = Execution::Parallel;
    std::size_t max_boxes_per_level = std::size_t{1} << 22;
    // Clip the q-range of each dimension to q <= sqrt(2/n)(1 - 1e-6); a
    // dimension whose clipped range is empty is skipped.
    bool clip_to_domain = false;
};

// A claim "plus(n,q) - minus(n,q) > 0" over a box; minus is optional.
struct Claim {
    std::string id;
    ClaimFunction plus;
    std::optional<ClaimFunction> minus;
};

Interval interval_eval(const Claim& claim, int n, const Interval& q);

// Adaptive bisection on q. Proven iff every leaf enclosure has lo > 0;
// Disproven iff a point enclosure has hi < 0; Inconclusive otherwise.
Certificate certify(const Claim& claim, const ParamBox& box, const CertifyOptions& options = {});
Certificate certify_positive(ClaimFunction fn, const ParamBox& box, const CertifyOptions& options = {});
// Certifies fn_a < fn_b, i.e. fn_b - fn_a > 0.
Certificate certify_less(ClaimFunction fn_a, ClaimFunction fn_b, const ParamBox& box,
                         const CertifyOptions& options = {});

// Bisection bracket of width <= tol around a sign change of fn(n, .) inside
// `bracket`. Throws PreconditionError unless the endpoint signs are certified
// opposite.
Interval isolate_root(ClaimFunction fn, int n, const Interval& bracket, double tol);

// Named claims exposed by the command line.
struct NamedClaim {
    std::string name;
    std::string description;
    Claim claim;
    bool needs_gap;  // q-range is clipped to q < sqrt(2/n)
};

const std::vector<NamedClaim>& named_claims();
const NamedClaim& find_named_claim(const std::string& name);

// Box outcomes of one bisection level, exposed for testing and benchmarking.
enum class BoxKind { Positive, Negative, Straddles, DomainError };

struct BoxOutcome {
    BoxKind kind;
    std::optional<Interval> enclosure;
    std::optional<Interval> midpoint_enclosure;  // set unless the box is Positive
    // DomainError box whose left endpoint q_lo > 0 is already outside the
    // claim's domain. Claim domains are q-intervals starting at 0, so the whole
    // box lies outside and is not subdivided.
    bool outside_domain = false;
};

struct PendingBox {
    int n;
    double q_lo;
    double q_hi;
    int depth;
};

std::vector<BoxOutcome> evaluate_boxes(const Claim& claim, const std::vector<PendingBox>& boxes,
                                       Execution execution);

} // namespace ssy
