#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tspl/errors.hpp"
#include "tspl/problem.hpp"

using namespace tspl;

namespace {

TimeScale unit_scale() { return TimeScale({ClosedInterval{0.0, 1.0}}, 1e-3); }

ProblemSpec basic_spec(double p, Nonlinearity f) {
    return ProblemSpec(p, 1.0, 1.0, 0.5, 0.5, unit_scale(), std::move(f));
}

} // namespace

TEST_CASE("phi_p basics") {
    CHECK(phi_p(2.0, -3.0) == -3.0);
    CHECK(phi_p(3.0, -2.0) == doctest::Approx(-4.0).epsilon(1e-15));
    for (double p : {1.5, 2.0, 3.0, 4.7}) CHECK(phi_p(p, 0.0) == 0.0);
}

TEST_CASE("phi_q inverts phi_p") {
    CHECK(phi_q(2.0, 0.7) == 0.7);
    CHECK(phi_q(1.5, phi_p(1.5, 5.0)) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(phi_q(3.0, -4.0) == doctest::Approx(-2.0).epsilon(1e-12));

    // 10^3 log-spaced magnitudes in [-1e6, 1e6], both signs and zero
    for (double p : {1.2, 1.5, 2.0, 3.0, 5.0}) {
        std::vector<double> points{0.0};
        for (int j = 0; j < 500; ++j) {
            const double mag = std::pow(10.0, -6.0 + 12.0 * j / 499.0);
            points.push_back(mag);
            points.push_back(-mag);
        }
        for (double s : points) {
            const double there_back = phi_q(p, phi_p(p, s));
            const double back_there = phi_p(p, phi_q(p, s));
            CHECK(std::abs(there_back - s) <= 1e-12 * std::max(1.0, std::abs(s)));
            CHECK(std::abs(back_there - s) <= 1e-12 * std::max(1.0, std::abs(s)));
        }
    }
}

TEST_CASE("phi_p is odd and strictly increasing") {
    for (double p : {1.5, 2.0, 3.0}) {
        double prev = phi_p(p, -10.0);
        for (double s = -9.75; s <= 10.0; s += 0.25) {
            const double v = phi_p(p, s);
            CHECK(v > prev);
            CHECK(phi_p(p, -s) == doctest::Approx(-v).epsilon(1e-15));
            prev = v;
        }
    }
}

TEST_CASE("conjugate exponent") {
    for (double p : {1.1, 1.5, 2.0, 3.0, 10.0}) {
        const ProblemSpec spec = basic_spec(p, Nonlinearity::constant(1.0));
        CHECK(std::abs(1.0 / spec.p() + 1.0 / spec.q() - 1.0) <= 1e-12);
    }
}

TEST_CASE("resistivity laws") {
    const auto ntc = Nonlinearity::ntc(2.0);
    CHECK(ntc(0.0) == 1.0);
    CHECK(ntc(1.0) == doctest::Approx(0.25).epsilon(1e-15));
    const auto cst = Nonlinearity::constant(1.0);
    CHECK(cst(0.0) == 1.0);
    CHECK(cst(17.0) == 1.0);
    const auto pw = Nonlinearity::power(2.0, 1.5);
    CHECK(pw(4.0) == doctest::Approx(16.0).epsilon(1e-15));
    CHECK(pw(0.0) == 0.0);
    CHECK_THROWS_AS(ntc(-1.0), HypothesisError); // negative state

    const auto tab = Nonlinearity::tabulated({0.0, 1.0, 2.0}, {1.0, 3.0, 2.0});
    CHECK(tab(0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(tab(1.5) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(tab(5.0) == 2.0); // clamped beyond the last breakpoint
}

TEST_CASE("law validation") {
    CHECK_THROWS_AS(Nonlinearity::ntc(1.5), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::constant(0.0), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::power(-1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::power(1.0, -0.5), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::tabulated({0.0, 1.0}, {1.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::tabulated({1.0, 0.0}, {1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(Nonlinearity::tabulated({0.0}, {1.0}), ValidationError);
}

TEST_CASE("extrema over [0, r]") {
    CHECK(Nonlinearity::ntc(2.0).extrema(1.0) ==
          std::pair<double, double>{0.25, 1.0}); // strictly decreasing: endpoint-exact
    CHECK(Nonlinearity::constant(2.0).extrema(5.0) == std::pair<double, double>{2.0, 2.0});
    CHECK(Nonlinearity::power(1.0, 1.0).extrema(3.0) ==
          std::pair<double, double>{0.0, 3.0}); // monotone increasing, inf at 0

    // tabulated: a piecewise-linear interpolant attains its extrema at
    // breakpoints or range endpoints, so the reference values are exact
    const auto tab = Nonlinearity::tabulated({0.0, 0.3, 0.7, 1.0, 2.0}, {1.0, 2.7, 0.4, 1.9, 1.1});
    const double r = 1.7;
    const auto [mn, mx] = tab.extrema(r);
    double exact_min = tab(0.0), exact_max = tab(0.0);
    for (double s : {0.3, 0.7, 1.0, r}) {
        exact_min = std::min(exact_min, tab(s));
        exact_max = std::max(exact_max, tab(s));
    }
    CHECK(mn == doctest::Approx(exact_min).epsilon(1e-9));
    CHECK(mx == doctest::Approx(exact_max).epsilon(1e-9));
}

TEST_CASE("problem spec validation") {
    const auto f = Nonlinearity::constant(1.0);
    CHECK_THROWS_AS(ProblemSpec(1.0, 1.0, 1.0, 0.5, 0.5, unit_scale(), f), ValidationError);
    CHECK_THROWS_AS(ProblemSpec(2.0, -1.0, 1.0, 0.5, 0.5, unit_scale(), f), ValidationError);
    CHECK_THROWS_AS(ProblemSpec(2.0, 1.0, -1.0, 0.5, 0.5, unit_scale(), f), ValidationError);
    CHECK_THROWS_AS(ProblemSpec(2.0, 1.0, 1.0, 1.0, 0.5, unit_scale(), f), ValidationError);
    CHECK_THROWS_AS(ProblemSpec(2.0, 1.0, 1.0, 0.0, 0.5, unit_scale(), f), ValidationError);
    CHECK_THROWS_AS(ProblemSpec(2.0, 1.0, 1.0, 0.5, 1.0, unit_scale(), f), ValidationError); // eta = T
    CHECK_THROWS_AS(ProblemSpec(2.0, 1.0, 1.0, 0.5, 0.0, unit_scale(), f), ValidationError);
    // eta inside a gap
    const TimeScale gap({ClosedInterval{0.0, 1.0}, ClosedInterval{2.0, 3.0}}, 1e-2);
    CHECK_THROWS_AS(ProblemSpec(2.0, 1.0, 1.0, 0.5, 1.75, gap, f), ValidationError);
    // lambda = 0 is representable (zero forcing)
    const ProblemSpec zero(2.0, 1.0, 0.0, 0.5, 0.5, unit_scale(), f);
    CHECK(zero.lambda() == 0.0);
    const ProblemSpec spec = basic_spec(2.0, f);
    CHECK(spec.with_lambda(3.5).lambda() == 3.5);
    CHECK(spec.T() == 1.0);
    CHECK(spec.timescale().grid().point(spec.eta_index()) == doctest::Approx(0.5).epsilon(1e-15));
}
