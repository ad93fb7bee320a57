#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "tspl/timescale.hpp"

namespace tspl {

/// Odd power map |s|^{p-2} s, p > 1.
double phi_p(double p, double s);

/// Functional inverse of phi_p: |s|^{q-2} s with 1/p + 1/q = 1.
double phi_q(double p, double s);

struct NtcLaw {
    double k = 2.0; // f(s) = (1 + s)^{-k}, k >= 2
};

struct ConstantLaw {
    double c = 1.0;
};

struct PowerLaw {
    double c = 1.0; // f(s) = c s^alpha
    double alpha = 0.0;
};

struct TabulatedLaw {
    std::vector<double> s; // strictly increasing breakpoints
    std::vector<double> f; // positive values, linear interpolation, clamped outside
};

/// Temperature-dependent resistivity f: positive and continuous on the
/// evaluated range of states s >= 0.
class Nonlinearity {
public:
    static Nonlinearity ntc(double k);
    static Nonlinearity constant(double c);
    static Nonlinearity power(double c, double alpha);
    static Nonlinearity tabulated(std::vector<double> s, std::vector<double> f);

    /// f(s). Throws HypothesisError for s < 0.
    double operator()(double s) const;

    /// (min, max) of f over [0, r]. Exact for the closed-form laws; sampled
    /// (1024 points plus endpoints) with golden-section refinement for
    /// tabulated data.
    std::pair<double, double> extrema(double r) const;

    const char* kind() const;

    template <typename Law>
    const Law* get_if() const {
        return std::get_if<Law>(&law_);
    }

private:
    using Law = std::variant<NtcLaw, ConstantLaw, PowerLaw, TabulatedLaw>;
    explicit Nonlinearity(Law law) : law_(std::move(law)) {}

    Law law_;
};

/// All parameters of the nonlocal p-Laplacian boundary value problem:
/// exponents p (with conjugate q) and k, forcing strength lambda, transfer
/// coefficient beta, interior node eta, the time scale (T = t_max), and the
/// resistivity law f. Immutable; all operations are pure.
class ProblemSpec {
public:
    ProblemSpec(double p, double k, double lambda, double beta, double eta,
                TimeScale timescale, Nonlinearity f);

    double p() const { return p_; }
    double q() const { return q_; }
    double k() const { return k_; }
    double lambda() const { return lambda_; }
    double beta() const { return beta_; }
    double eta() const { return eta_; }
    double T() const { return timescale_.t_max(); }
    std::size_t eta_index() const { return eta_index_; }
    const TimeScale& timescale() const { return timescale_; }
    const Nonlinearity& f() const { return f_; }
    std::shared_ptr<const Grid> grid_ptr() const { return timescale_.grid_ptr(); }

    double phi_p(double s) const { return tspl::phi_p(p_, s); }
    double phi_q(double s) const { return tspl::phi_q(p_, s); }
    double eval_f(double s) const { return f_(s); }
    std::pair<double, double> f_extrema(double r) const;

    /// Copy with a different forcing strength (lambda ladders, searches).
    ProblemSpec with_lambda(double lambda) const;

private:
    double p_, q_, k_, lambda_, beta_, eta_;
    TimeScale timescale_;
    Nonlinearity f_;
    std::size_t eta_index_ = 0;
};

} // namespace tspl
