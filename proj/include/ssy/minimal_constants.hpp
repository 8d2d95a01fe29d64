#pragma once

#include "ssy/param_domain.hpp"

namespace ssy {

// All minimal-hypersurface closure constants at one parameter point.
struct ConstantBundle {
    ParamPoint point;
    double A;
    double C1;          // shared gradient estimate
    double C3;          // Young route, before the terminal absorption
    double CY;          // Young closure constant
    double C3H;         // Hölder route, before the terminal absorption
    double CH;          // Hölder closure constant
    double ratio;       // CH / CY
    double ratio_root;  // (CH / CY)^(1/(1+q)), closed form
};

// q^q with the continuous extension 0^0 = 1.
double pow_self(double q);

// q^(q/(1+q)) with the continuous extension at q = 0.
double pow_self_scaled(double q);

// C1 = 2/A + 8(q^2+2q+2)/A^2.
double c1_shared(const ParamPoint& p);

// C3 = (2+q)((1+q) C1 + 1).
double c3_young(const ParamPoint& p);

// CY = 2^(1+q) q^q / (1+q)^(1+q) * C3^(1+q).
double c_young(const ParamPoint& p);

// C3H = 2(1+q)^2((1+q)^2 C1 + 1).
double c3_holder(const ParamPoint& p);

// CH = C3H^(1+q).
double c_holder(const ParamPoint& p);

// (CH/CY)^(1/(1+q)) = (1+q)^3 / (q^(q/(1+q)) (2+q)) * (1 + q (D-1)/D).
double ratio_root(const ParamPoint& p);

// f(q) = (1+q)^4 / (q^(q/(1+q)) (2+q)), defined on (0,1).
double f_bound(double q);

// g = log f and its derivative, on (0,1).
double g_log(double q);
double g_prime(double q);

ConstantBundle minimal_bundle(const ParamPoint& p);

// Relative distance kept from sqrt(2/n) by the crossover scan.
inline constexpr double kBoundaryMargin = 1e-6;

// Bracket (width <= 1e-9) around the smallest q > 1/8 where CY - CH changes
// sign from positive, or an empty interval when CH < CY throughout
// (1/8, sqrt(2/n)(1 - kBoundaryMargin)].
QInterval crossover_q(int n);

} // namespace ssy
