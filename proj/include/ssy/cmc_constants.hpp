#pragma once

#include "ssy/param_domain.hpp"

namespace ssy {

// A geodesic ball of radius R with interior fraction theta on a CMC
// hypersurface of mean curvature H. R and 1/|H| must use the same length unit.
struct CmcScale {
    double H;
    double R;
    double theta;

    // Throws DomainError unless R > 0, 0 < theta < 1 and H is finite.
    void validate() const;
};

struct CmcConstantBundle {
    ParamPoint point;
    double delta;
    double C0;
    double B0;      // positive part of B0_raw
    double B0_raw;
    double a;
    double b;       // max(0, 2(1+q)^2 B0 - n)
    double calC1;
    double calC2;
};

enum class Regime { MinimalLike, CurvatureDominated };

const char* to_string(Regime regime);

struct LocalEstimate {
    double gradient_coefficient;   // calC1 / ((1-theta) R)^(2+2q)
    double curvature_coefficient;  // calC2 |H|^(2+2q)
    double combined_small_scale;   // (calC1 + calC2) / ((1-theta) R)^(2+2q)
    Regime regime;                 // MinimalLike iff |H| (1-theta) R <= 1
};

struct ClosureCoefficients {
    double a;
    double b;
};

struct CalConstants {
    double calC1;
    double calC2;
};

// delta = A / (4(1+q)^2).
double delta_param(const ParamPoint& p);

double c0_cmc(const ParamPoint& p);

// Pre-clamp coefficient of H^2 K in the CMC gradient estimate, and its
// positive part.
double b0_raw(const ParamPoint& p);
double b0_cmc(const ParamPoint& p);

ClosureCoefficients closure_coefficients(const ParamPoint& p);

// calC1 = 2^q a^(1+q), calC2 = 2^q b^(1+q).
CalConstants cal_constants(const ParamPoint& p);

CmcConstantBundle cmc_bundle(const ParamPoint& p);

LocalEstimate local_estimate(const ParamPoint& p, const CmcScale& scale);

// Largest R with |H|(1-theta)R <= 1; +infinity when H = 0.
double threshold_radius(double H, double theta);

} // namespace ssy
