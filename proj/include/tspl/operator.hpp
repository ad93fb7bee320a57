#pragma once

#include <utility>

#include "tspl/problem.hpp"
#include "tspl/timescale.hpp"

namespace tspl {

/// Intermediate quantities of the integral-equation right-hand side for a
/// given state u:
///
///   integral_f = nabla integral of f(u) over [0, T]
///   denom      = integral_f^k                      (nonlocal denominator D)
///   h          = f(u) / denom
///   A          = phi_p(u'(0)) = -(lambda beta / (1 - beta)) * int_0^eta h
///   g(s)       = lambda * int_0^s h - A            (nabla integrals)
///   B          = u(0) = (int_0^T phi_q(g) - beta int_0^eta phi_q(g)) / (1 - beta)
///
/// lambda enters g and A exactly once; h carries no lambda factor.
struct OperatorState {
    double integral_f;
    double denom;
    GridFunction h;
    double A;
    GridFunction g;
    double B;
};

/// Builds the operator state for u >= 0 on the problem's grid.
/// Throws DomainError when u is negative or lives on a different grid,
/// HypothesisError when an f sample or the denominator is not positive.
OperatorState build_state(const ProblemSpec& spec, const GridFunction& u);

/// The image t -> B - int_0^t phi_q(g(s)) delta-s of an already-built state.
GridFunction operator_image(const ProblemSpec& spec, const OperatorState& state);

/// One application of the fixed-point operator: operator_image(build_state(u)).
/// The output is nonnegative, nonincreasing and concave for every admissible u.
GridFunction apply_G(const ProblemSpec& spec, const GridFunction& u);

/// Boundary condition defects of u:
///   r1 = phi_p(u^delta(0)) - beta * phi_p(u^delta(eta))
///   r2 = u(T) - beta * u(eta)
std::pair<double, double> boundary_residuals(const ProblemSpec& spec, const GridFunction& u);

/// Pointwise defect of the dynamic equation at interior grid points:
///   R(t) = -(phi_p(u^delta))^nabla (t) - lambda f(u(t)) / D,
/// with the nested one-sided grid derivatives. Endpoint entries are zero.
GridFunction equation_residual(const ProblemSpec& spec, const GridFunction& u);

} // namespace tspl
