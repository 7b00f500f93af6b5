#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "lvgame/analytic.hpp"
#include "lvgame/errors.hpp"
#include "lvgame/model.hpp"

using namespace lvgame;
using namespace lvgame::analytic;

TEST_CASE("logistic_solution examples") {
    CHECK(logistic_solution(10.0, 10.0, 1.0, 5.0) == 10.0);
    CHECK(logistic_solution(0.0, 10.0, 1.0, 5.0) == 0.0);
    CHECK(logistic_solution(1.0, 10.0, 1.0, std::log(9.0)) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(logistic_solution(1.0, 10.0, 1.0, 0.0) == doctest::Approx(1.0));
    CHECK(logistic_solution(1.0, 10.0, 1.0, 200.0) == doctest::Approx(10.0));
}

TEST_CASE("logistic_solution rejects out-of-range inputs") {
    CHECK_THROWS_AS(logistic_solution(1.0, 0.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(logistic_solution(1.0, 1.0, 0.0, 1.0), Error);
    CHECK_THROWS_AS(logistic_solution(-1.0, 1.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(logistic_solution(1.0, 1.0, 1.0, -1.0), Error);
}

TEST_CASE("closed-form logistic satisfies the ODE (central differences)") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    const double h = 1e-5;
    for (int i = 0; i < 500; ++i) {
        const double K = 10.0 * u(rng), rho = u(rng), N0 = K * u(rng) / 2.0, t = 0.01 + u(rng);
        const double fd = (logistic_solution(N0, K, rho, t + h) - logistic_solution(N0, K, rho, t - h)) / (2.0 * h);
        const double N = logistic_solution(N0, K, rho, t);
        const double rhs = validate(LogisticParams{rho, K}).derivative(State{N})[0];
        CHECK(std::abs(fd - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("logistic monotonicity") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 200; ++i) {
        const double K = 5.0, rho = 0.5 + u(rng);
        const double below = K * u(rng), above = K * (1.0 + u(rng));
        double prev_b = logistic_solution(below, K, rho, 0.0), prev_a = logistic_solution(above, K, rho, 0.0);
        for (double t = 0.25; t <= 10.0; t += 0.25) {
            const double b = logistic_solution(below, K, rho, t), a = logistic_solution(above, K, rho, t);
            CHECK(b > prev_b);
            CHECK(a < prev_a);
            prev_b = b;
            prev_a = a;
        }
    }
}

TEST_CASE("zero-interaction curves") {
    const ExponentialCurve g{1.0, 1.0, CurveSign::growth};
    CHECK(zero_interaction_risk(g, 0.0) == 1.0);
    CHECK(zero_interaction_risk(g, 1.0) == doctest::Approx(std::numbers::e));
    CHECK(zero_interaction_risk({2.0, 0.5, CurveSign::growth}, 2.0) == doctest::Approx(2.0 * std::numbers::e));

    const ExponentialCurve d{1.0, 1.0, CurveSign::decay};
    CHECK(zero_interaction_return(d, 0.0) == 1.0);
    CHECK(zero_interaction_return(d, 1.0) == doctest::Approx(1.0 / std::numbers::e));
    CHECK(zero_interaction_return({5.0, 0.2, CurveSign::decay}, 10.0) == doctest::Approx(5.0 / std::exp(2.0)));
    CHECK(zero_interaction_return({5.0, 0.2, CurveSign::decay}, 10.0) == doctest::Approx(0.67668).epsilon(1e-5));

    CHECK_THROWS_AS(zero_interaction_risk(d, 1.0), Error);
    CHECK_THROWS_AS(zero_interaction_risk({0.0, 1.0, CurveSign::growth}, 1.0), Error);
}

TEST_CASE("zero-interaction monotone; product constant when rates match") {
    for (double t = 0.0; t < 20.0; t += 0.5) {
        CHECK(zero_interaction_risk({1.5, 0.3, CurveSign::growth}, t + 0.5) >
              zero_interaction_risk({1.5, 0.3, CurveSign::growth}, t));
        CHECK(zero_interaction_return({1.5, 0.3, CurveSign::decay}, t + 0.5) <
              zero_interaction_return({1.5, 0.3, CurveSign::decay}, t));
        const double prod = zero_interaction_risk({2.0, 0.7, CurveSign::growth}, t) *
                            zero_interaction_return({3.0, 0.7, CurveSign::decay}, t);
        CHECK(prod == doctest::Approx(6.0).epsilon(1e-12));
    }
}

TEST_CASE("overflow is an explicit error") {
    try {
        zero_interaction_risk({1.0, 1.0, CurveSign::growth}, 1000.0);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Overflow);
    }
    try {
        zero_interaction_return({1.0, 1.0, CurveSign::decay}, 1e4);
        FAIL("expected underflow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Overflow);
    }
}

TEST_CASE("threshold constant") {
    CHECK(threshold_constant(std::numbers::e) == doctest::Approx(1.0));
    CHECK(threshold_constant(100.0) == doctest::Approx(36.787944117144));
    CHECK(threshold_constant(1.0) == doctest::Approx(0.36788).epsilon(1e-5));
    CHECK_THROWS_AS(threshold_constant(0.0), Error);
}
