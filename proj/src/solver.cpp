#include "tspl/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tspl/errors.hpp"

namespace tspl {

namespace {

constexpr double kNormCeiling = 1e12;

void validate(const SolverConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw ValidationError("tol must be positive", "/solver/tol");
    if (cfg.max_iter < 1) throw ValidationError("max_iter must be at least 1", "/solver/max_iter");
    if (!(cfg.relax > 0.0 && cfg.relax <= 1.0)) {
        throw ValidationError("relax must lie in (0, 1]", "/solver/relax");
    }
    if (!(cfg.init >= 0.0)) throw ValidationError("init must be nonnegative", "/solver/init");
}

} // namespace

SolveReport solve(const ProblemSpec& spec, const SolverConfig& cfg) {
    validate(cfg);
    const auto grid = spec.grid_ptr();
    std::vector<double> u(grid->size(), cfg.init);

    std::vector<double> history;
    history.reserve(16);
    bool converged = false;
    int iterations = 0;
    int clamped = 0;
    std::optional<OperatorState> state;
    std::optional<GridFunction> image;

    for (int n = 1; n <= cfg.max_iter; ++n) {
        iterations = n;
        // f may be undefined below 0; floor the iterate before applying G.
        for (double& v : u) {
            if (v < 0.0) {
                v = 0.0;
                ++clamped;
            }
            if (!std::isfinite(v)) throw DivergenceError("non-finite iterate", n);
        }
        state = build_state(spec, GridFunction(grid, u));
        image = operator_image(spec, *state);

        double step = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double next = (1.0 - cfg.relax) * u[i] + cfg.relax * (*image)[i];
            step = std::max(step, std::abs(next - u[i]));
            u[i] = next;
            norm = std::max(norm, std::abs(next));
        }
        history.push_back(step);
        if (!std::isfinite(step) || norm > kNormCeiling) {
            throw DivergenceError("iterate norm overflow", n);
        }
        if (step <= cfg.tol) {
            converged = true;
            break;
        }
    }

    SolveReport report(std::move(*image));
    report.converged = converged;
    report.iterations = iterations;
    report.history = std::move(history);
    report.clamped_points = clamped;
    report.norm = max_norm(report.solution);
    report.residual_sup = max_norm(equation_residual(spec, report.solution));
    const auto [r1, r2] = boundary_residuals(spec, report.solution);
    report.r1 = r1;
    report.r2 = r2;
    report.cone = cone_check(spec, report.solution, 10.0 * spec.timescale().h_max());
    report.integral_f = state->integral_f;
    report.denom = state->denom;
    report.A = state->A;
    report.B = state->B;
    return report;
}

} // namespace tspl
