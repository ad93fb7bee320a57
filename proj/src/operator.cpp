#include "tspl/operator.hpp"

#include <cmath>
#include <vector>

#include "tspl/errors.hpp"

namespace tspl {

namespace {

void check_input(const ProblemSpec& spec, const GridFunction& u) {
    if (u.grid_ptr() != spec.grid_ptr()) {
        throw DomainError("state function does not live on the problem's grid");
    }
    for (double v : u.values()) {
        if (v < 0.0) throw DomainError("operator input must be nonnegative");
    }
}

} // namespace

OperatorState build_state(const ProblemSpec& spec, const GridFunction& u) {
    check_input(spec, u);
    const auto grid = u.grid_ptr();
    const std::size_t n = grid->size();

    std::vector<double> fu(n);
    for (std::size_t i = 0; i < n; ++i) {
        fu[i] = spec.eval_f(u[i]);
        if (!(fu[i] > 0.0) || !std::isfinite(fu[i])) {
            throw HypothesisError("resistivity must be positive on the state range (H1)");
        }
    }
    GridFunction f_of_u(grid, std::move(fu));

    const double integral_f = nabla_prefix(f_of_u).back();
    const double denom = std::pow(integral_f, spec.k());
    if (!(denom > 0.0) || !std::isfinite(denom)) {
        throw HypothesisError("nonlocal denominator must be positive and finite");
    }

    std::vector<double> hv(n);
    for (std::size_t i = 0; i < n; ++i) hv[i] = f_of_u[i] / denom;
    GridFunction h(grid, std::move(hv));

    const std::vector<double> h_cum = nabla_prefix(h);
    const double A = -(spec.lambda() * spec.beta() / (1.0 - spec.beta())) * h_cum[spec.eta_index()];

    std::vector<double> gv(n);
    for (std::size_t i = 0; i < n; ++i) gv[i] = spec.lambda() * h_cum[i] - A;
    GridFunction g(grid, std::move(gv));

    std::vector<double> phi_g(n);
    for (std::size_t i = 0; i < n; ++i) phi_g[i] = spec.phi_q(g[i]);
    const std::vector<double> pg_cum = delta_prefix(GridFunction(grid, std::move(phi_g)));
    const double B =
        (pg_cum.back() - spec.beta() * pg_cum[spec.eta_index()]) / (1.0 - spec.beta());

    return OperatorState{integral_f, denom, std::move(h), A, std::move(g), B};
}

GridFunction operator_image(const ProblemSpec& spec, const OperatorState& state) {
    const auto grid = state.g.grid_ptr();
    std::vector<double> phi_g(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) phi_g[i] = spec.phi_q(state.g[i]);
    const std::vector<double> pg_cum = delta_prefix(GridFunction(grid, std::move(phi_g)));
    std::vector<double> out(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) out[i] = state.B - pg_cum[i];
    return GridFunction(grid, std::move(out));
}

GridFunction apply_G(const ProblemSpec& spec, const GridFunction& u) {
    return operator_image(spec, build_state(spec, u));
}

std::pair<double, double> boundary_residuals(const ProblemSpec& spec, const GridFunction& u) {
    const std::size_t eta = spec.eta_index();
    const double r1 =
        spec.phi_p(delta_derivative(u, 0)) - spec.beta() * spec.phi_p(delta_derivative(u, eta));
    const double r2 = u[u.size() - 1] - spec.beta() * u[eta];
    return {r1, r2};
}

GridFunction equation_residual(const ProblemSpec& spec, const GridFunction& u) {
    check_input(spec, u);
    const auto grid = u.grid_ptr();
    const std::size_t n = grid->size();

    std::vector<double> fu(n);
    for (std::size_t i = 0; i < n; ++i) fu[i] = spec.eval_f(u[i]);
    const double denom = std::pow(nabla_prefix(GridFunction(grid, fu)).back(), spec.k());
    if (!(denom > 0.0) || !std::isfinite(denom)) {
        throw HypothesisError("nonlocal denominator must be positive and finite");
    }

    // w_i = phi_p(u^delta(t_i)) exists for every non-maximal index.
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) w[i] = spec.phi_p(delta_derivative(u, i));
    GridFunction w_fn(grid, std::move(w));

    std::vector<double> r(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        r[i] = -nabla_derivative(w_fn, i) - spec.lambda() * fu[i] / denom;
    }
    return GridFunction(grid, std::move(r));
}

} // namespace tspl
