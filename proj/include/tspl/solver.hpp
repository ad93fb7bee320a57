#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tspl/analysis.hpp"
#include "tspl/operator.hpp"
#include "tspl/problem.hpp"

namespace tspl {

struct SolverConfig {
    double tol = 1e-10;     // sup-norm tolerance on the iteration step
    int max_iter = 500;
    double relax = 0.5;     // damping weight in (0, 1]
    double init = 1.0;      // constant initial state (any nonnegative constant is in K)
    std::uint64_t seed = 42; // generator seed for sampling-based diagnostics
};

/// Outcome of a damped Picard run. `solution` is the operator image of the
/// final iterate (the fixed-point candidate), so it satisfies the structural
/// boundary identity to rounding accuracy independently of the step tolerance.
struct SolveReport {
    explicit SolveReport(GridFunction sol) : solution(std::move(sol)) {}

    GridFunction solution;
    bool converged = false;
    int iterations = 0;
    std::vector<double> history; // sup-norm steps ||u_{n+1} - u_n||
    double residual_sup = 0.0;   // sup of the interior equation residual
    double r1 = 0.0;             // boundary defects of the solution
    double r2 = 0.0;
    ConeReport cone;
    double norm = 0.0;           // max_norm(solution)
    int clamped_points = 0;      // negative entries floored before applying G
    double integral_f = 0.0;     // state summary at the solution
    double denom = 0.0;
    double A = 0.0;
    double B = 0.0;
};

/// Damped Picard iteration u <- (1 - relax) u + relax G(u) from u = init,
/// stopping when the sup-norm step drops to cfg.tol or max_iter is reached.
/// Non-convergence is reported, not thrown; NaN or norm overflow in the
/// iterates throws DivergenceError naming the iteration.
SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg);

} // namespace tspl
