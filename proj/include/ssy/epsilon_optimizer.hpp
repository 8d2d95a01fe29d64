#pragma once

#include "ssy/execution.hpp"
#include "ssy/param_domain.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ssy {

// Free absorption parameters of the minimal-case argument. lambda is the
// fraction of the left-hand integral spent on the terminal Young absorption.
struct YoungEpsilons {
    double eps1;
    double eps2;
    double eps3;
    double lambda;
};

// Free absorption parameters of the CMC gradient estimate.
struct CmcEpsilons {
    double eps1;
    double eps2;
    double eps3;
};

struct CmcGeneral {
    double left;    // coefficient of the gradient integral; must be positive
    double C0;
    double B0_raw;
};

enum class Target { YoungCY, HolderCH, CmcCalC1 };

const char* to_string(Target target);
Target parse_target(const std::string& name);

// Number of free parameters the optimizer searches for a target:
// YoungCY -> (eps1, eps2, eps3, lambda), HolderCH -> (eps1, eps2),
// CmcCalC1 -> (eps1, eps2, eps3).
std::size_t parameter_count(Target target);

// (1/eps1 + 1 + (1+q)^2/eps2) / (A - eps1 - eps2).
double c1_general(const ParamPoint& p, double eps1, double eps2);

// ((1+q)^2 + (1+q) eps3) C1 + 1 + (1+q)/eps3.
double c3_general(const ParamPoint& p, double c1, double eps3);

// Young closure constant when the absorbed fraction is lambda:
// C3^(1+q) q^q / ((1+q)^(1+q) lambda^q (1 - lambda)).
double young_terminal_general(double q, double c3, double lambda);

// (2(1+q)^2((1+q)^2 C1(eps1, eps2) + 1))^(1+q).
double c_holder_general(const ParamPoint& p, double eps1, double eps2);

CmcGeneral cmc_general(const ParamPoint& p, const CmcEpsilons& eps);

// Fixed epsilons that reproduce the closed-form constants exactly.
YoungEpsilons canonical_young_epsilons(const ParamPoint& p);
CmcEpsilons canonical_cmc_epsilons(const ParamPoint& p);
std::vector<double> canonical_parameters(Target target, const ParamPoint& p);

// Objective value at a parameter vector, or +infinity when the vector is
// infeasible. For CmcCalC1 the objective is calC1 + weight * calC2.
double objective(Target target, const ParamPoint& p, std::span<const double> params,
                 double cmc_weight = 0.0);

struct OptimizeOptions {
    double cmc_weight = 0.0;
    int grid_points = 32;       // per axis
    int max_iterations = 200;   // per simplex run
    int max_restarts = 16;
    double rel_tol = 1e-10;
    Execution execution = Execution::Parallel;
};

struct OptimizationResult {
    Target target;
    std::vector<double> best_params;
    double best_value;
    double paper_value;
    double improvement_ratio;   // best_value / paper_value, in (0, 1]
    std::size_t evaluations;
    bool converged;
};

OptimizationResult optimize(Target target, const ParamPoint& p, const OptimizeOptions& options = {});

// Grid seeding stage, exposed for testing and benchmarking.
struct GridSeed {
    std::vector<double> params;
    double value;
    std::size_t evaluations;
};

// Per-axis candidate values of the seeding grid, in increasing order.
std::vector<std::vector<double>> seed_axes(Target target, const ParamPoint& p, int points_per_axis);

GridSeed grid_seed(Target target, const ParamPoint& p, int points_per_axis, double cmc_weight,
                   Execution execution);

} // namespace ssy
