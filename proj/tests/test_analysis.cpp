#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tspl/analysis.hpp"
#include "tspl/errors.hpp"
#include "tspl/operator.hpp"
#include "tspl/rng.hpp"

using namespace tspl;

namespace {

// NTC reference instance: T = [0,1], p = 2, k = 1, beta = 1/2, eta = 1/2, lambda = 0.1
ProblemSpec ntc_reference(double lambda = 0.1) {
    return ProblemSpec(2.0, 1.0, lambda, 0.5, 0.5, TimeScale({ClosedInterval{0.0, 1.0}}, 1e-3),
                       Nonlinearity::ntc(2.0));
}

} // namespace

TEST_CASE("harnack constant") {
    CHECK(rho_cone(0.5, 1.0, 2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    Rng rng(12345);
    for (int trial = 0; trial < 10000; ++trial) {
        const double beta = rng.uniform(0.01, 0.99);
        const double T = rng.uniform(0.5, 10.0);
        const double eta = rng.uniform(0.05, 0.95) * T;
        const double rho = rho_cone(beta, eta, T);
        CHECK(rho >= 0.0);
        CHECK(rho < beta);
        // the defining identity, to ulp-level accuracy
        CHECK(std::abs(rho * (T - beta * eta) - beta * (T - eta)) <=
              2e-15 * std::max(1.0, beta * (T - eta)));
    }
}

TEST_CASE("cone check") {
    const ProblemSpec spec(2.0, 1.0, 1.0, 0.5, 1.0, TimeScale({ClosedInterval{0.0, 2.0}}, 1e-3),
                           Nonlinearity::constant(1.0));
    SUBCASE("the quadratic solution is in the cone") {
        const auto u = GridFunction::sample(
            spec.grid_ptr(), [](double t) { return 3.25 - 0.25 * t * t - 0.5 * t; });
        const ConeReport report = cone_check(spec, u, 1e-2);
        CHECK(report.rho_cone == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(report.nonneg);
        CHECK(report.concave);
        CHECK(report.harnack);
        // min u = 1.25 against rho * ||u|| = 3.25 / 3
        CHECK(report.harnack_margin == doctest::Approx(1.25 - 3.25 / 3.0).epsilon(1e-9));
    }
    SUBCASE("positive constants are in the cone with equality slopes") {
        const auto u = GridFunction::constant(spec.grid_ptr(), 2.0);
        const ConeReport report = cone_check(spec, u, 1e-12);
        CHECK(report.nonneg);
        CHECK(report.concave);
        CHECK(report.harnack);
        CHECK(report.concave_violation == 0.0);
    }
    SUBCASE("violations are measured") {
        const auto convex = GridFunction::sample(spec.grid_ptr(), [](double t) { return t * t; });
        CHECK_FALSE(cone_check(spec, convex, 1e-6).concave);
        const auto dipped = GridFunction::sample(spec.grid_ptr(), [](double t) { return t - 1.0; });
        const ConeReport report = cone_check(spec, dipped, 1e-6);
        CHECK_FALSE(report.nonneg);
        CHECK(report.nonneg_violation == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("existence check against a symbolic reduction at k = 0") {
    // for f = c and k = 0 the nonlocal denominator is 1 and, at p = 2,
    // A1 = (1 - beta)(T + beta eta / (1 - beta)) / (T (2 - beta))
    const double c = 0.8, beta = 0.25, eta = 0.5, T = 2.0;
    const ProblemSpec spec(2.0, 0.0, 0.3, beta, eta, TimeScale({ClosedInterval{0.0, T}}, 1e-3),
                           Nonlinearity::constant(c));
    const double a = 1.7, b = 0.9;
    const ExistenceReport report = existence_check(spec, a, b);
    const double A1_direct = (1.0 - beta) * (T + beta * eta / (1.0 - beta)) / (T * (2.0 - beta));
    CHECK(report.A1 == doctest::Approx(A1_direct).epsilon(1e-12));
    CHECK(report.h2_holds == (c <= a * A1_direct));
    CHECK(report.inf_f_a == c);
    CHECK(report.sup_f_b == c);
    CHECK_FALSE(report.degenerate_a);
}

TEST_CASE("existence check on the NTC reference instance") {
    const ProblemSpec spec = ntc_reference();
    const ExistenceReport report = existence_check(spec, 1.0, 1.0);
    // inf f on [0,1] is 1/4, sup is 1; the printed constants reduce to
    // A1 = (1/3) phi_p(1.5 / 0.25) = 2 and B1 = 2 * 0.5 * lambda = 0.1
    CHECK(report.inf_f_a == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.sup_f_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.A1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.B1 == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(report.h2_holds);  // max f = 1 <= phi_p(a A1) = 2
    CHECK(report.h3_holds);  // min f = 1/4 >= phi_p(b B1) = 0.1
    // the proof chain reads differently: chain_a = 36 lambda = 3.6 > a
    CHECK(report.chain_a == doctest::Approx(36.0 * 0.1).epsilon(1e-12));
    CHECK_FALSE(report.chain_a_holds);
    CHECK(report.chain_b == doctest::Approx(0.0025).epsilon(1e-12));
    CHECK_FALSE(report.chain_b_holds);
    REQUIRE(report.lambda_star.has_value());
    CHECK(*report.lambda_star == doctest::Approx(1.0 / 36.0).epsilon(1e-7));
    // both orderings of (a, b) are accepted
    CHECK_NOTHROW(existence_check(spec, 2.0, 1.0));
}

TEST_CASE("lambda_star search") {
    SUBCASE("bisection meets its tolerance contract") {
        const ProblemSpec spec = ntc_reference();
        const auto star = lambda_star_search(spec, 1.0);
        REQUIRE(star.has_value());
        // F(lambda) = 36 lambda at p = 2; |F(lambda*) - a| <= 1e-9 a
        CHECK(std::abs(36.0 * *star - 1.0) <= 1e-9);
    }
    SUBCASE("capped when the chain already holds at lambda = 1") {
        // constant f, k = 0, small horizon: the lambda-free factor is below a
        const ProblemSpec spec(2.0, 0.0, 0.9, 0.25, 0.25,
                               TimeScale({ClosedInterval{0.0, 0.5}}, 1e-3),
                               Nonlinearity::constant(1.0));
        const auto star = lambda_star_search(spec, 1.0);
        REQUIRE(star.has_value());
        CHECK(*star == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(*star < 1.0);
    }
    SUBCASE("degenerate infimum yields none") {
        const ProblemSpec spec(2.0, 1.0, 0.5, 0.5, 0.5, TimeScale({ClosedInterval{0.0, 1.0}}, 1e-3),
                               Nonlinearity::power(1.0, 1.0));
        CHECK_FALSE(lambda_star_search(spec, 1.0).has_value());
        const ExistenceReport report = existence_check(spec, 1.0, 1.0);
        CHECK(report.degenerate_a);
        CHECK(std::isnan(report.A1));
    }
}

TEST_CASE("boundary sampling stays under the chain bound") {
    const ProblemSpec spec = ntc_reference();
    const auto star = lambda_star_search(spec, 1.0);
    REQUIRE(star.has_value());
    const ProblemSpec half = spec.with_lambda(*star / 2.0);
    const ExistenceReport report = existence_check(half, 1.0, 1.0);
    REQUIRE(report.chain_a_holds);
    Rng rng(42);
    const double rho = rho_cone(half.beta(), half.eta(), half.T());
    for (int trial = 0; trial < 50; ++trial) {
        const GridFunction u = sample_cone_boundary(half.grid_ptr(), rho, 1.0, rng);
        const double norm = max_norm(apply_G(half, u));
        CHECK(norm <= report.chain_a * (1.0 + 1e-6));
        CHECK(norm <= 1.0 * (1.0 + 1e-6));
    }
}

TEST_CASE("limit classification") {
    const TimeScale ts({ClosedInterval{0.0, 1.0}}, 1e-2);
    SUBCASE("ntc at p = 2: superlinear at 0, sublinear at infinity") {
        const LimitReport r = classify_limits(ntc_reference());
        CHECK(r.f0 == LimitClass::Infinite);
        CHECK(r.finf == LimitClass::Zero);
        CHECK(r.corollary_applies);
    }
    SUBCASE("constant f at p = 2 behaves like 1/u") {
        const ProblemSpec spec(2.0, 1.0, 1.0, 0.5, 0.5, ts, Nonlinearity::constant(1.0));
        const LimitReport r = classify_limits(spec);
        CHECK(r.f0 == LimitClass::Infinite);
        CHECK(r.finf == LimitClass::Zero);
        CHECK(r.corollary_applies);
    }
    SUBCASE("f(u) = u at p = 2 is exactly linear: no verdict") {
        const ProblemSpec spec(2.0, 1.0, 1.0, 0.5, 0.5, ts, Nonlinearity::power(1.0, 1.0));
        const LimitReport r = classify_limits(spec);
        CHECK(r.f0 == LimitClass::Finite);
        CHECK(r.finf == LimitClass::Finite);
        CHECK_FALSE(r.corollary_applies);
    }
    SUBCASE("ntc under a larger p stays superlinear-sublinear") {
        const ProblemSpec spec(4.0, 1.0, 1.0, 0.5, 0.5, ts, Nonlinearity::ntc(2.0));
        const LimitReport r = classify_limits(spec);
        CHECK(r.f0 == LimitClass::Infinite);
        CHECK(r.finf == LimitClass::Zero);
        CHECK(r.corollary_applies);
    }
    SUBCASE("power matching p - 1 is finite on both ends") {
        const ProblemSpec spec(3.0, 1.0, 1.0, 0.5, 0.5, ts, Nonlinearity::power(2.5, 2.0));
        const LimitReport r = classify_limits(spec);
        CHECK(r.f0 == LimitClass::Finite);
        CHECK(r.finf == LimitClass::Finite);
        CHECK_FALSE(r.corollary_applies);
    }
    SUBCASE("tabulated data clamps to a constant tail: behaves like 1/u") {
        const ProblemSpec spec(2.0, 1.0, 1.0, 0.5, 0.5, ts,
                               Nonlinearity::tabulated({0.0, 1.0, 2.0}, {3.0, 2.0, 1.5}));
        const LimitReport r = classify_limits(spec);
        CHECK(r.f0 == LimitClass::Infinite);
        CHECK(r.finf == LimitClass::Zero);
        CHECK(r.corollary_applies);
    }
}

TEST_CASE("cone boundary sampler") {
    const TimeScale ts({ClosedInterval{0.0, 1.0}, IsolatedPoint{1.5}, ClosedInterval{2.0, 3.0}},
                       1e-2);
    const ProblemSpec spec(2.0, 1.0, 1.0, 0.5, 1.0, ts, Nonlinearity::constant(1.0));
    const double rho = rho_cone(spec.beta(), spec.eta(), spec.T());
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const double r = rng.uniform(0.5, 4.0);
        const GridFunction u = sample_cone_boundary(spec.grid_ptr(), rho, r, rng);
        CHECK(u[0] == r); // norm attained at 0
        CHECK(max_norm(u) == r);
        for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i] <= u[i - 1] + 1e-15);
        const ConeReport report = cone_check(spec, u, 1e-9);
        CHECK(report.nonneg);
        CHECK(report.concave);
        CHECK(report.harnack);
    }
}
