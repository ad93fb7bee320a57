#include "tspl/problem.hpp"

#include <algorithm>
#include <cmath>

#include "tspl/errors.hpp"

namespace tspl {

double phi_p(double p, double s) {
    return std::copysign(std::pow(std::abs(s), p - 1.0), s);
}

double phi_q(double p, double s) {
    return std::copysign(std::pow(std::abs(s), 1.0 / (p - 1.0)), s);
}

Nonlinearity Nonlinearity::ntc(double k) {
    if (!(k >= 2.0)) throw ValidationError("ntc exponent must satisfy k >= 2", "/f/k");
    return Nonlinearity(NtcLaw{k});
}

Nonlinearity Nonlinearity::constant(double c) {
    if (!(c > 0.0)) throw ValidationError("constant resistivity must be positive", "/f/c");
    return Nonlinearity(ConstantLaw{c});
}

Nonlinearity Nonlinearity::power(double c, double alpha) {
    if (!(c > 0.0)) throw ValidationError("power coefficient must be positive", "/f/c");
    if (!(alpha >= 0.0)) throw ValidationError("power exponent must be nonnegative", "/f/alpha");
    return Nonlinearity(PowerLaw{c, alpha});
}

Nonlinearity Nonlinearity::tabulated(std::vector<double> s, std::vector<double> f) {
    if (s.size() != f.size()) {
        throw ValidationError("breakpoints and values must have equal length", "/f/s");
    }
    if (s.size() < 2) throw ValidationError("tabulated law needs at least two breakpoints", "/f/s");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && !(s[i] > s[i - 1])) {
            throw ValidationError("breakpoints must be strictly increasing", "/f/s");
        }
        if (!(f[i] > 0.0)) throw ValidationError("tabulated values must be positive", "/f/f");
    }
    return Nonlinearity(TabulatedLaw{std::move(s), std::move(f)});
}

namespace {

double eval_tabulated(const TabulatedLaw& law, double s) {
    if (s <= law.s.front()) return law.f.front();
    if (s >= law.s.back()) return law.f.back();
    const auto it = std::upper_bound(law.s.begin(), law.s.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - law.s.begin());
    const double w = (s - law.s[i - 1]) / (law.s[i] - law.s[i - 1]);
    return law.f[i - 1] + w * (law.f[i] - law.f[i - 1]);
}

// Golden-section refinement of an extremum of `eval` inside [lo, hi].
template <typename Eval, typename Better>
double golden_refine(Eval eval, double lo, double hi, double best, Better better) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = eval(x1);
    double f2 = eval(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
        if (better(f1, f2)) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = eval(x2);
        }
    }
    best = better(f1, best) ? f1 : best;
    best = better(f2, best) ? f2 : best;
    return best;
}

std::pair<double, double> extrema_tabulated(const TabulatedLaw& law, double r) {
    const auto eval = [&law](double s) { return eval_tabulated(law, s); };
    constexpr std::size_t n_samples = 1024;
    double min_v = eval(0.0), max_v = eval(0.0);
    std::size_t min_i = 0, max_i = 0;
    for (std::size_t j = 1; j <= n_samples + 1; ++j) {
        const double s = r * static_cast<double>(j) / static_cast<double>(n_samples + 1);
        const double v = eval(std::min(s, r));
        if (v < min_v) { min_v = v; min_i = j; }
        if (v > max_v) { max_v = v; max_i = j; }
    }
    const auto bracket = [&](std::size_t j) {
        const double step = r / static_cast<double>(n_samples + 1);
        const double lo = std::max(0.0, static_cast<double>(j - (j > 0 ? 1 : 0)) * step);
        const double hi = std::min(r, static_cast<double>(j + 1) * step);
        return std::pair<double, double>(lo, hi);
    };
    const auto [min_lo, min_hi] = bracket(min_i);
    const auto [max_lo, max_hi] = bracket(max_i);
    min_v = golden_refine(eval, min_lo, min_hi, min_v, std::less<double>{});
    max_v = golden_refine(eval, max_lo, max_hi, max_v, std::greater<double>{});
    return {min_v, max_v};
}

} // namespace

double Nonlinearity::operator()(double s) const {
    if (s < 0.0) throw HypothesisError("resistivity evaluated at negative state");
    return std::visit(
        [s](const auto& law) -> double {
            using L = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<L, NtcLaw>) {
                return std::pow(1.0 + s, -law.k);
            } else if constexpr (std::is_same_v<L, ConstantLaw>) {
                return law.c;
            } else if constexpr (std::is_same_v<L, PowerLaw>) {
                if (law.alpha == 0.0) return law.c;
                return law.c * std::pow(s, law.alpha);
            } else {
                return eval_tabulated(law, s);
            }
        },
        law_);
}

std::pair<double, double> Nonlinearity::extrema(double r) const {
    if (!(r > 0.0)) throw DomainError("extrema radius must be positive");
    // Closed-form monotonicity shortcuts for the builtin laws.
    if (const auto* ntc = get_if<NtcLaw>()) {
        (void)ntc;
        return {(*this)(r), (*this)(0.0)};
    }
    if (const auto* cst = get_if<ConstantLaw>()) return {cst->c, cst->c};
    if (const auto* pw = get_if<PowerLaw>()) {
        if (pw->alpha == 0.0) return {pw->c, pw->c};
        return {0.0, (*this)(r)};
    }
    return extrema_tabulated(*get_if<TabulatedLaw>(), r);
}

const char* Nonlinearity::kind() const {
    return std::visit(
        [](const auto& law) -> const char* {
            using L = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<L, NtcLaw>) return "ntc";
            else if constexpr (std::is_same_v<L, ConstantLaw>) return "constant";
            else if constexpr (std::is_same_v<L, PowerLaw>) return "power";
            else return "tabulated";
        },
        law_);
}

ProblemSpec::ProblemSpec(double p, double k, double lambda, double beta, double eta,
                         TimeScale timescale, Nonlinearity f)
    : p_(p),
      q_(p / (p - 1.0)),
      k_(k),
      lambda_(lambda),
      beta_(beta),
      eta_(eta),
      timescale_(std::move(timescale)),
      f_(std::move(f)) {
    if (!(p_ > 1.0)) throw ValidationError("p must satisfy p > 1", "/p");
    if (!(k_ >= 0.0)) throw ValidationError("k must be nonnegative", "/k");
    if (!(lambda_ >= 0.0)) throw ValidationError("lambda must be nonnegative", "/lambda");
    if (!(beta_ > 0.0 && beta_ < 1.0)) throw ValidationError("0 < beta < 1 is required", "/beta");
    if (!(eta_ > 0.0 && eta_ < timescale_.t_max())) {
        throw ValidationError("eta must satisfy 0 < eta < T", "/eta");
    }
    if (!timescale_.contains(eta_)) throw ValidationError("eta not in time scale", "/eta");
    const auto idx = timescale_.grid().index_of(eta_);
    if (!idx) {
        throw ValidationError("eta must coincide with a grid point (adjust h_max)", "/eta");
    }
    eta_index_ = *idx;
}

std::pair<double, double> ProblemSpec::f_extrema(double r) const { return f_.extrema(r); }

ProblemSpec ProblemSpec::with_lambda(double lambda) const {
    ProblemSpec copy = *this;
    if (!(lambda >= 0.0)) throw ValidationError("lambda must be nonnegative", "/lambda");
    copy.lambda_ = lambda;
    return copy;
}

} // namespace tspl
