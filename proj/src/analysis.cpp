#include "tspl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tspl/errors.hpp"

namespace tspl {

double rho_cone(double beta, double eta, double T) {
    return beta * (T - eta) / (T - beta * eta);
}

ConeReport cone_check(const ProblemSpec& spec, const GridFunction& u, double tol) {
    ConeReport report;
    report.rho_cone = rho_cone(spec.beta(), spec.eta(), spec.T());

    double min_u = u[0];
    double norm = 0.0;
    for (double v : u.values()) {
        min_u = std::min(min_u, v);
        norm = std::max(norm, std::abs(v));
    }
    report.nonneg_violation = std::max(0.0, -min_u);
    report.nonneg = report.nonneg_violation <= tol;

    double worst_increase = 0.0;
    double prev = delta_derivative(u, 0);
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        const double slope = delta_derivative(u, i);
        worst_increase = std::max(worst_increase, slope - prev);
        prev = slope;
    }
    report.concave_violation = worst_increase;
    report.concave = worst_increase <= tol;

    report.harnack_margin = min_u - report.rho_cone * norm;
    report.harnack = report.harnack_margin >= -tol;
    return report;
}

const char* to_string(LimitClass c) {
    switch (c) {
        case LimitClass::Zero: return "zero";
        case LimitClass::Finite: return "finite";
        case LimitClass::Infinite: return "infinite";
        default: return "inconclusive";
    }
}

namespace {

// Classification thresholds: 10^+-6 over twelve sampled decades.
constexpr double kInfiniteThreshold = 1e6;
constexpr double kZeroThreshold = 1e-6;
constexpr int kDecades = 12;

LimitClass classify_sequence(const std::vector<double>& ratio) {
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 1; i < ratio.size(); ++i) {
        if (ratio[i] < ratio[i - 1] * (1.0 - 1e-9)) increasing = false;
        if (ratio[i] > ratio[i - 1] * (1.0 + 1e-9)) decreasing = false;
    }
    const double last = ratio.back();
    if (last > kInfiniteThreshold) {
        return increasing ? LimitClass::Infinite : LimitClass::Inconclusive;
    }
    if (last < kZeroThreshold) {
        return decreasing ? LimitClass::Zero : LimitClass::Inconclusive;
    }
    // Moderate tail: finite when the last few ratios have settled.
    double lo = ratio.back(), hi = ratio.back();
    for (std::size_t i = ratio.size() - std::min<std::size_t>(4, ratio.size()); i < ratio.size(); ++i) {
        lo = std::min(lo, ratio[i]);
        hi = std::max(hi, ratio[i]);
    }
    return hi <= 10.0 * lo ? LimitClass::Finite : LimitClass::Inconclusive;
}

} // namespace

LimitReport classify_limits(const ProblemSpec& spec) {
    std::vector<double> near_zero, near_inf;
    for (int j = 1; j <= kDecades; ++j) {
        const double u0 = std::pow(10.0, -j);
        const double ui = std::pow(10.0, j);
        near_zero.push_back(spec.eval_f(u0) / spec.phi_p(u0));
        near_inf.push_back(spec.eval_f(ui) / spec.phi_p(ui));
    }
    LimitReport report;
    report.f0 = classify_sequence(near_zero);
    report.finf = classify_sequence(near_inf);
    report.corollary_applies =
        (report.f0 == LimitClass::Zero && report.finf == LimitClass::Infinite) ||
        (report.f0 == LimitClass::Infinite && report.finf == LimitClass::Zero);
    return report;
}

namespace {

struct ChainPieces {
    double inf_f_a = 0.0;
    double sup_f_a = 0.0;
    double A1 = std::numeric_limits<double>::quiet_NaN();
    bool degenerate = false;
    // lambda-free factor C of the chain bound chain_a(lambda) = phi_q(lambda) * C
    double lambda_free = std::numeric_limits<double>::quiet_NaN();
};

ChainPieces chain_pieces(const ProblemSpec& spec, double a) {
    ChainPieces out;
    const auto [inf_a, sup_a] = spec.f_extrema(a);
    out.inf_f_a = inf_a;
    out.sup_f_a = sup_a;
    if (!(inf_a > 0.0)) {
        out.degenerate = true;
        return out;
    }
    const double T = spec.T();
    const double beta = spec.beta();
    const double x = (T + beta * spec.eta() / (1.0 - beta)) / std::pow(T * inf_a, spec.k());
    out.A1 = (1.0 - beta) / (T * (2.0 - beta)) * spec.phi_p(x);
    out.lambda_free = a * out.A1 * T * ((2.0 - beta) / (1.0 - beta)) * spec.phi_q(x);
    return out;
}

} // namespace

ExistenceReport existence_check(const ProblemSpec& spec, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("norm levels a and b must be positive");
    ExistenceReport report;
    report.a = a;
    report.b = b;
    report.rho = rho_cone(spec.beta(), spec.eta(), spec.T());

    const ChainPieces pieces = chain_pieces(spec, a);
    report.inf_f_a = pieces.inf_f_a;
    report.sup_f_a = pieces.sup_f_a;
    report.A1 = pieces.A1;
    report.degenerate_a = pieces.degenerate;
    if (!pieces.degenerate) {
        report.h2_lhs = pieces.sup_f_a;
        report.h2_rhs = spec.phi_p(a * pieces.A1);
        report.h2_holds = report.h2_lhs <= report.h2_rhs;
        report.chain_a = spec.phi_q(spec.lambda()) * pieces.lambda_free;
        report.chain_a_holds = report.chain_a <= a;
    }

    const auto [inf_b, sup_b] = spec.f_extrema(b);
    report.inf_f_b = inf_b;
    report.sup_f_b = sup_b;
    const double T = spec.T();
    const double beta = spec.beta();
    const double eta = spec.eta();
    const double y = spec.lambda() / std::pow(T * sup_b, spec.k());
    report.B1 = (1.0 - beta) / (beta * (T - eta)) * spec.phi_p(eta) * spec.phi_p(y);
    report.h3_lhs = inf_b;
    report.h3_rhs = spec.phi_p(b * report.B1);
    report.h3_holds = report.h3_lhs >= report.h3_rhs;
    report.chain_b =
        b * report.B1 * (beta / (1.0 - beta)) * spec.phi_q(y) * spec.phi_q(eta) * (T - eta);
    report.chain_b_holds = report.chain_b >= b;

    report.lambda_star = lambda_star_search(spec, a);
    return report;
}

std::optional<double> lambda_star_search(const ProblemSpec& spec, double a) {
    if (!(a > 0.0)) throw DomainError("norm level a must be positive");
    const ChainPieces pieces = chain_pieces(spec, a);
    if (pieces.degenerate || !std::isfinite(pieces.lambda_free)) return std::nullopt;
    const auto bound = [&](double lam) { return spec.phi_q(lam) * pieces.lambda_free; };
    if (bound(1.0) <= a) return 1.0 - 1e-9;
    // bound is continuous, strictly increasing, and vanishes at 0+; bisect
    // for the crossing bound(lambda) = a.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (bound(mid) <= a) lo = mid; else hi = mid;
        if (std::abs(bound(lo) - a) <= 1e-9 * a) break;
    }
    return lo;
}

GridFunction sample_cone_boundary(std::shared_ptr<const Grid> grid, double rho, double r,
                                  Rng& rng) {
    if (!(r > 0.0)) throw DomainError("boundary norm level must be positive");
    const std::size_t n = grid->size();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const double drop = rng.uniform(); // fraction of r lost over [0, T]
        if (1.0 - drop < rho) continue;    // reject: Harnack bound violated
        // Nondecreasing slope magnitudes give a concave, nonincreasing profile.
        std::vector<double> mag(n > 1 ? n - 1 : 0);
        double cum = 0.0;
        for (auto& m : mag) {
            cum += rng.uniform() + 1e-3;
            m = cum;
        }
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            total += mag[i] * (grid->point(i + 1) - grid->point(i));
        }
        std::vector<double> values(n);
        values[0] = r;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            acc += mag[i] * (grid->point(i + 1) - grid->point(i));
            values[i + 1] = r * (1.0 - drop * acc / total);
        }
        return GridFunction(std::move(grid), std::move(values));
    }
    throw DomainError("cone boundary sampling failed (rho too close to 1)");
}

} // namespace tspl
