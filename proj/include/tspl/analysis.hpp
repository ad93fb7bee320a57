#pragma once

#include <memory>
#include <optional>

#include "tspl/problem.hpp"
#include "tspl/rng.hpp"
#include "tspl/timescale.hpp"

namespace tspl {

/// Guaranteed minimum-to-norm ratio of solutions: beta (T - eta) / (T - beta eta).
double rho_cone(double beta, double eta, double T);

/// Cone membership diagnostics for a state u. Each flag comes with the
/// worst observed violation (0 when the property holds exactly):
///   nonneg : min u >= -tol
///   concave: successive grid delta-derivatives nonincreasing within tol
///   harnack: min u >= rho_cone * max_norm(u) - tol
struct ConeReport {
    bool nonneg = false;
    double nonneg_violation = 0.0;
    bool concave = false;
    double concave_violation = 0.0;
    bool harnack = false;
    double harnack_margin = 0.0;
    double rho_cone = 0.0;

    bool all() const { return nonneg && concave && harnack; }
};

ConeReport cone_check(const ProblemSpec& spec, const GridFunction& u, double tol);

enum class LimitClass { Zero, Finite, Infinite, Inconclusive };

const char* to_string(LimitClass c);

/// Numeric classification of f0 = lim_{u->0} f(u)/phi_p(u) and
/// finf = lim_{u->inf} f(u)/phi_p(u), sampled over twelve decades each.
/// The superlinear/sublinear verdict ("at least one positive solution")
/// applies for (zero, infinite) and (infinite, zero).
struct LimitReport {
    LimitClass f0 = LimitClass::Inconclusive;
    LimitClass finf = LimitClass::Inconclusive;
    bool corollary_applies = false;
};

LimitReport classify_limits(const ProblemSpec& spec);

/// Existence conditions for norm levels a and b, evaluated two ways: via the
/// closed-form constants A1/B1 (inequalities H2/H3), and via the inequality
/// chain that actually bounds the operator-image norm over the boundary sets
/// (chain_a is an upper bound for ||Gu|| on ||u|| = a given H2; chain_b a
/// lower bound on ||u|| = b given H3). The two routes are not algebraically
/// identical and are reported side by side; lambda_star derives from the
/// chain. A1 is undefined (degenerate_a) when inf f over [0, a] vanishes.
struct ExistenceReport {
    double a = 0.0;
    double b = 0.0;
    double inf_f_a = 0.0; // extrema of f over [0, a] and [0, b]
    double sup_f_a = 0.0;
    double inf_f_b = 0.0;
    double sup_f_b = 0.0;
    double A1 = 0.0; // NaN when degenerate_a
    double B1 = 0.0;
    bool degenerate_a = false;
    double h2_lhs = 0.0; // max f on [0,a]   vs  phi_p(a A1)
    double h2_rhs = 0.0;
    bool h2_holds = false;
    double h3_lhs = 0.0; // min f on [0,b]   vs  phi_p(b B1)
    double h3_rhs = 0.0;
    bool h3_holds = false;
    double chain_a = 0.0;
    bool chain_a_holds = false; // chain_a <= a
    double chain_b = 0.0;
    bool chain_b_holds = false; // chain_b >= b
    std::optional<double> lambda_star;
    double rho = 0.0;
};

ExistenceReport existence_check(const ProblemSpec& spec, double a, double b);

/// Largest lambda in (0, 1) for which the proof chain keeps the operator-image
/// norm bound at or below a (bisection, capped at 1 - 1e-9 when the bound
/// already holds at lambda = 1). Nullopt when the lambda-free chain factor is
/// degenerate or non-finite.
std::optional<double> lambda_star_search(const ProblemSpec& spec, double a);

/// Random element of the boundary set {u in K : max_norm(u) = r}: a concave,
/// nonincreasing profile with u(0) = r and min u >= rho * r, drawn by
/// rejection sampling from the given deterministic generator.
GridFunction sample_cone_boundary(std::shared_ptr<const Grid> grid, double rho, double r, Rng& rng);

} // namespace tspl
