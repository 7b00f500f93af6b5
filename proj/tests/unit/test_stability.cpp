#include "doctest.h"

#include <random>

#include "lvgame/equilibria.hpp"
#include "lvgame/stability.hpp"
#include "oracles.hpp"

using namespace lvgame;
using namespace lvgame::testing;

namespace {

bool has(const EigenPair& e, double re, double im) {
    for (const auto& l : e.values) {
        if (std::abs(l.real() - re) < 1e-12 && std::abs(l.imag() - im) < 1e-12) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("jacobian examples") {
    const auto comp = validate(NondimParams{0.5, 0.5, 1.0});
    CHECK(jacobian(comp, State{0, 0}).entries == Matrix::identity(2));

    const auto pp = validate(PredatorPreyParams{1.0, 0.5, 0.5, 0.25});
    CHECK(jacobian(pp, State{0, 0}).entries == Matrix{{1, 0}, {0, -0.25}});
    CHECK(jacobian(pp, State{0.5, 2}).entries == Matrix{{0, -0.25}, {1, 0}});

    // Entry (2,1) carries the u2 factor.
    const auto j = jacobian(validate(NondimParams{0.5, 0.8, 2.0}), State{0.3, 0.7}).entries;
    CHECK(j(1, 0) == doctest::Approx(-2.0 * 0.8 * 0.7));

    CHECK_THROWS(jacobian(comp, State{0.0}));
}

TEST_CASE("eigenvalues_2x2 examples") {
    auto e = eigenvalues_2x2(Matrix{{1, 0}, {0, -0.25}});
    CHECK(e.values.size() == 2);
    CHECK(has(e, 1.0, 0.0));
    CHECK(has(e, -0.25, 0.0));

    e = eigenvalues_2x2(Matrix{{0, -0.25}, {1, 0}});
    CHECK(has(e, 0.0, 0.5));
    CHECK(has(e, 0.0, -0.5));

    e = eigenvalues_2x2(Matrix::identity(2));
    CHECK(e.values[0] == std::complex<double>(1.0, 0.0));
    CHECK(e.values[1] == std::complex<double>(1.0, 0.0));
}

TEST_CASE("eigenvalues reproduce trace and determinant") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const Matrix m{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const auto e = eigenvalues_2x2(m);
        const auto sum = e.values[0] + e.values[1];
        const auto prod = e.values[0] * e.values[1];
        const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        CHECK(std::abs(sum.real() - m.trace()) <= 1e-12 * std::max(1.0, std::abs(m.trace())));
        CHECK(std::abs(sum.imag()) <= 1e-12);
        CHECK(std::abs(prod.real() - det) <= 1e-12 * std::max(1.0, std::abs(det)));
        CHECK(std::abs(prod.imag()) <= 1e-12);
    }
}

TEST_CASE("classify") {
    const auto pair = [](std::complex<double> a, std::complex<double> b) { return EigenPair{{a, b}}; };
    CHECK(classify(pair(1.0, -0.25), true) == PointClass::saddle);
    CHECK(classify(pair(0.0, -0.25), true) == PointClass::degenerate);
    CHECK(classify(pair({0.0, 0.5}, {0.0, -0.5}), true) == PointClass::center);
    CHECK(classify(pair({-0.1, 0.5}, {-0.1, -0.5}), true) == PointClass::stable_spiral);
    CHECK(classify(pair({0.1, 0.5}, {0.1, -0.5}), true) == PointClass::unstable_spiral);
    CHECK(classify(pair(-1.0, -2.0), true) == PointClass::stable_node);
    CHECK(classify(pair(1.0, 1.0), true) == PointClass::unstable_node);
    CHECK(classify(pair(1.0, -0.25), false) == PointClass::non_equilibrium);
}

TEST_CASE("regime_case") {
    CHECK(regime_case({0.5, 0.5, 1.0}) == RegimeCase::A);
    CHECK(regime_case({1.5, 2.0, 1.0}) == RegimeCase::B);
    CHECK(regime_case({0.5, 1.5, 1.0}) == RegimeCase::C);
    CHECK(regime_case({1.5, 0.5, 1.0}) == RegimeCase::D);
    CHECK(regime_case({1.0, 0.5, 1.0}) == RegimeCase::Boundary);
    CHECK(regime_case({2.0, 1.0, 1.0, Interaction::cooperative}) == RegimeCase::B);
    CHECK(regime_case({0.5, 1.5, 1.0, Interaction::cooperative}) == RegimeCase::A);
    CHECK(regime_case({2.0, 0.5, 1.0, Interaction::cooperative}) == RegimeCase::Boundary);
}

TEST_CASE("regime_case is symmetric under swapping players") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    const auto swap_cd = [](RegimeCase c) {
        if (c == RegimeCase::C) return RegimeCase::D;
        if (c == RegimeCase::D) return RegimeCase::C;
        return c;
    };
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng), b = u(rng);
        for (auto mode : {Interaction::competitive, Interaction::cooperative}) {
            const auto x = regime_case({a, b, 1.0, mode});
            const auto y = regime_case({b, a, 1.0, mode});
            CHECK(y == (mode == Interaction::competitive ? swap_cd(x) : x));
        }
    }
}

TEST_CASE("cooperative sign check") {
    CHECK(cooperative_sign_check(Matrix{{-1, 0.5}, {0.3, -1}}));
    CHECK_FALSE(cooperative_sign_check(Matrix{{-1, -0.5}, {0.3, -1}}));
    const auto m = validate(NondimParams{0.5, 0.5, 1.0, Interaction::cooperative});
    const auto pts = enumerate_equilibria(m);
    CHECK(cooperative_sign_check(jacobian(m, pts[3].coords).entries));
}

TEST_CASE("negative diagonal dominance") {
    auto d = negative_diagonal_dominance(Matrix{{-2, 0.5}, {0.5, -2}});
    REQUIRE(d);
    CHECK(*d == State{1.0, 1.0});
    CHECK_FALSE(negative_diagonal_dominance(Matrix{{-1, 2}, {2, -1}}));
    d = negative_diagonal_dominance(Matrix{{-1, 0}, {0, -1}});
    REQUIRE(d);
    CHECK(*d == State{1.0, 1.0});

    // Needs a non-uniform witness: row 1 fails at d = (1,1).
    const Matrix m{{-1, 3}, {0.1, -1}};
    d = negative_diagonal_dominance(m);
    REQUIRE(d);
    for (std::size_t i = 0; i < 2; ++i) {
        double s = m(i, i) * (*d)[i];
        for (std::size_t j = 0; j < 2; ++j)
            if (j != i) s += std::abs(m(i, j)) * (*d)[j];
        CHECK(s < 0.0);
        CHECK((*d)[i] > 0.0);
    }
    CHECK_FALSE(negative_diagonal_dominance(Matrix{{1, 0}, {0, -1}}));
}

TEST_CASE("stable matrix verdicts") {
    CHECK(is_stable_matrix(Matrix{{0, -0.25}, {1, 0}}) == StabilityVerdict::unstable);
    CHECK(is_stable_matrix(Matrix{{-1, 0}, {0, -2}}) == StabilityVerdict::stable);
    CHECK(is_stable_matrix(Matrix{{-1, 0.25, 0.25}, {0.25, -1, 0.25}, {0.25, 0.25, -1}}) == StabilityVerdict::stable);
    CHECK(is_stable_matrix(Matrix{{1, 0.1, 0}, {0.1, -3, 0}, {0, 0, -3}}) == StabilityVerdict::unstable);
    CHECK(is_stable_matrix(Matrix{{-1, 2, 0}, {2, -1, 0}, {0, 0, -1}}) == StabilityVerdict::undetermined);
}

TEST_CASE("analytic jacobians match central differences") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> pos(0.1, 2.0), unit(0.1, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Model> models{
            validate(LogisticParams{pos(rng), pos(rng)}),
            validate(NondimParams{pos(rng), pos(rng), pos(rng), trial % 2 ? Interaction::competitive : Interaction::cooperative}),
            validate(TwoPlayerParams{pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), Interaction::cooperative}),
        };
        const double beta = 0.5 * unit(rng), eps = 0.5 * unit(rng);
        models.push_back(validate(PredatorPreyParams{beta + 0.5 * unit(rng), eps, eps + 0.5 * unit(rng), beta}));
        for (const auto& m : models) {
            State x(m.dimension());
            for (auto& v : x) v = pos(rng);
            const auto a = jacobian(m, x).entries;
            const auto f = fd_jacobian(m, x);
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j) CHECK(std::abs(a(i, j) - f(i, j)) <= 1e-5);
        }
    }
}

TEST_CASE("case A classes at the competitive equilibria") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> small(0.01, 0.99), r(0.2, 3.0);
    for (int i = 0; i < 500; ++i) {
        const auto m = validate(NondimParams{small(rng), small(rng), r(rng)});
        const auto pts = enumerate_equilibria(m);
        CHECK(analyze_point(m, pts[0]).point_class == PointClass::unstable_node);
        CHECK(analyze_point(m, pts[1]).point_class == PointClass::saddle);
        CHECK(analyze_point(m, pts[2]).point_class == PointClass::saddle);
        CHECK(is_attracting(analyze_point(m, pts[3]).point_class));
    }
}

TEST_CASE("predator-prey origin is always a saddle") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double beta = 0.5 * unit(rng), eps = 0.5 * unit(rng);
        const auto m = validate(PredatorPreyParams{beta + 0.5 * unit(rng), eps, eps + 0.5 * unit(rng), beta});
        CHECK(analyze_point(m, enumerate_equilibria(m)[0]).point_class == PointClass::saddle);
    }
}

TEST_CASE("non-fixed points get a formal linearization only") {
    const auto m = validate(PredatorPreyParams{1.0, 0.5, 0.5, 0.25});
    const auto pts = enumerate_equilibria(m);
    const auto r = analyze_point(m, pts[1]);
    CHECK(r.point_class == PointClass::non_equilibrium);
    CHECK(r.linearized_class == PointClass::unstable_node);
    CHECK_FALSE(r.notes.empty());

    const auto d = analyze_point(m, pts[2]);
    CHECK(d.point_class == PointClass::non_equilibrium);
    CHECK(d.linearized_class == PointClass::degenerate);
}

TEST_CASE("n > 2 points receive a certificate verdict") {
    NPlayerParams p{{1, 1, 1}, {1, 1, 1}, Matrix{{0, 0.2, 0.2}, {0.2, 0, 0.2}, {0.2, 0.2, 0}}, Interaction::competitive};
    const auto m = validate(p);
    const auto r = analyze_point(m, interior_equilibrium_nplayer(m));
    CHECK(r.eigen.method == EigenMethod::certificate);
    CHECK(r.verdict == StabilityVerdict::stable);
    CHECK(r.point_class == PointClass::unclassified);
}
