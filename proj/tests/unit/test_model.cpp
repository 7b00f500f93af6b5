#include "doctest.h"

#include <random>

#include "lvgame/errors.hpp"
#include "lvgame/model.hpp"
#include "lvgame/simulate.hpp"

using namespace lvgame;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected lvgame::Error");
    return ErrorKind::IoError;
}

std::string detail_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.detail();
    }
    FAIL("expected lvgame::Error");
    return {};
}

}  // namespace

TEST_CASE("validate accepts in-range parameters") {
    CHECK_NOTHROW(validate(LogisticParams{1.0, 10.0}));
    CHECK_NOTHROW(validate(PredatorPreyParams{1.0, 0.5, 0.5, 0.25}));
    CHECK_NOTHROW(validate(NondimParams{0.5, 0.5, 1.0, Interaction::competitive}));
    CHECK(validate(LogisticParams{1.0, 10.0}).dimension() == 1);
}

TEST_CASE("validate names the violated bound") {
    CHECK(kind_of([] { validate(LogisticParams{1.0, 0.0}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(detail_of([] { validate(LogisticParams{1.0, 0.0}); }) == "K > 0");
    CHECK(detail_of([] { validate(LogisticParams{-1.0, 1.0}); }) == "rho > 0");

    // epsilon above alpha
    CHECK(kind_of([] { validate(PredatorPreyParams{0.5, 0.6, 0.5, 0.25}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(detail_of([] { validate(PredatorPreyParams{0.5, 0.6, 0.5, 0.25}); }) == "alpha >= epsilon");
    CHECK(detail_of([] { validate(PredatorPreyParams{0.2, 0.1, 0.5, 0.25}); }) == "delta > beta");
    CHECK(detail_of([] { validate(PredatorPreyParams{1.5, 0.1, 0.5, 0.25}); }) == "0 < delta <= 1");

    CHECK(detail_of([] { validate(TwoPlayerParams{1, 1, 1, 1, 0.0, 0.5}); }) == "c1 > 0");
    CHECK(detail_of([] { validate(NondimParams{0.5, -1.0, 1.0}); }) == "a21 > 0");
}

TEST_CASE("n-player validation") {
    NPlayerParams p{{1, 1}, {1, 1, 1}, Matrix(2), Interaction::competitive};
    CHECK(kind_of([&] { validate(p); }) == ErrorKind::DimensionMismatch);
    p.K = {1, 1};
    p.C = Matrix(3);
    CHECK(kind_of([&] { validate(p); }) == ErrorKind::DimensionMismatch);
    p.C = Matrix{{0.0, 0.5}, {0.5, 0.1}};
    CHECK(detail_of([&] { validate(p); }) == "C[2][2] == 0");
    p.C = Matrix{{0.0, -0.5}, {0.5, 0.0}};
    CHECK(detail_of([&] { validate(p); }) == "C[1][2] >= 0");
    p.C = Matrix{{0.0, 0.5}, {0.5, 0.0}};
    CHECK(validate(p).dimension() == 2);
    CHECK(detail_of([] { validate(NPlayerParams{}); }) == "n >= 1");
}

TEST_CASE("derivative examples") {
    const auto logistic = validate(LogisticParams{1.0, 10.0});
    CHECK(logistic.derivative(State{10.0})[0] == 0.0);
    CHECK(logistic.derivative(State{5.0})[0] == doctest::Approx(2.5));

    const auto pp = validate(PredatorPreyParams{1.0, 0.5, 0.5, 0.25});
    const auto d = pp.derivative(State{0.5, 2.0});
    CHECK(d[0] == 0.0);
    CHECK(d[1] == 0.0);

    const auto nd = validate(NondimParams{0.5, 0.5, 1.0, Interaction::competitive});
    const auto dn = nd.derivative(State{2.0 / 3.0, 2.0 / 3.0});
    CHECK(std::abs(dn[0]) < 1e-15);
    CHECK(std::abs(dn[1]) < 1e-15);

    CHECK_THROWS_AS(nd.derivative(State{1.0}), Error);
}

TEST_CASE("two-player dimensional and n-player forms agree at n = 2") {
    const TwoPlayerParams two{1.3, 0.7, 4.0, 3.0, 0.2, 0.1, Interaction::competitive};
    NPlayerParams np{{1.3, 0.7}, {4.0, 3.0}, Matrix{{0.0, 0.2}, {0.1, 0.0}}, Interaction::competitive};
    const auto a = validate(two);
    const auto b = validate(np);
    for (State s : {State{1.0, 2.0}, State{0.3, 0.0}, State{5.0, 4.0}}) {
        const auto da = a.derivative(s);
        const auto db = b.derivative(s);
        CHECK(da[0] == doctest::Approx(db[0]).epsilon(1e-14));
        CHECK(da[1] == doctest::Approx(db[1]).epsilon(1e-14));
    }
}

TEST_CASE("logistic derivative vanishes at 0 and K") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double rho = u(rng), K = u(rng);
        const auto m = validate(LogisticParams{rho, K});
        CHECK(m.derivative(State{0.0})[0] == 0.0);
        CHECK(std::abs(m.derivative(State{K})[0]) <= 1e-12 * rho * K);
    }
}

TEST_CASE("a zero component has zero rate in that component, every variant") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(0.05, 3.0);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Model> models;
        models.push_back(validate(LogisticParams{pos(rng), pos(rng)}));
        models.push_back(validate(TwoPlayerParams{pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), pos(rng),
                                                  trial % 2 ? Interaction::competitive : Interaction::cooperative}));
        models.push_back(validate(NondimParams{pos(rng), pos(rng), pos(rng), Interaction::cooperative}));
        const double beta = unit(rng) * 0.5, delta = beta + 0.5 * unit(rng);
        const double eps = unit(rng) * 0.5, alpha = eps + 0.5 * unit(rng);
        models.push_back(validate(PredatorPreyParams{delta, eps, alpha, beta}));
        Matrix C(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) C(i, j) = pos(rng);
        models.push_back(validate(NPlayerParams{{pos(rng), pos(rng), pos(rng)}, {pos(rng), pos(rng), pos(rng)}, C,
                                                Interaction::competitive}));
        for (const auto& m : models) {
            const std::size_t n = m.dimension();
            for (std::size_t zero = 0; zero < n; ++zero) {
                State s(n);
                for (auto& v : s) v = pos(rng);
                s[zero] = 0.0;
                CHECK(m.derivative(s)[zero] == 0.0);
            }
        }
    }
}

TEST_CASE("nondimensionalize") {
    auto f = nondimensionalize(TwoPlayerParams{1, 1, 1, 1, 0.5, 0.5});
    CHECK(f.params.a12 == 0.5);
    CHECK(f.params.a21 == 0.5);
    CHECK(f.params.rho == 1.0);

    f = nondimensionalize(TwoPlayerParams{2, 1, 4, 3, 0.2, 0.1});
    CHECK(f.params.a12 == doctest::Approx(0.6));
    CHECK(f.params.a21 == doctest::Approx(0.4));
    CHECK(f.params.rho == doctest::Approx(0.5));
    CHECK(f.scale.time_scale == 2.0);

    f = nondimensionalize(TwoPlayerParams{1, 3, 2, 2, 1, 1, Interaction::cooperative});
    CHECK(f.params.a12 == 2.0);
    CHECK(f.params.a21 == 2.0);
    CHECK(f.params.rho == 3.0);
    CHECK(f.params.mode == Interaction::cooperative);

    CHECK_THROWS_AS(nondimensionalize(TwoPlayerParams{0, 1, 1, 1, 1, 1}), Error);
}

TEST_CASE("nondimensional round trip through dimensional simulation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> rate(0.2, 2.0), cap(0.5, 5.0), c(0.02, 0.6), start(0.05, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const TwoPlayerParams dim{rate(rng), rate(rng), cap(rng), cap(rng), c(rng) / 3.0, c(rng) / 3.0,
                                  trial % 2 ? Interaction::competitive : Interaction::cooperative};
        const auto form = nondimensionalize(dim);
        const State n0{start(rng) * dim.K1, start(rng) * dim.K2};

        // Dimensional steps of h map to nondimensional steps of rho1*h.
        const double h = 1e-3;
        IntegrationConfig cd{5.0, h};
        IntegrationConfig cn{5.0 * form.scale.time_scale, h * form.scale.time_scale};
        const auto td = integrate(validate(dim), n0, cd);
        const auto tn = integrate(validate(form.params), form.scale.to_nondim(n0), cn);
        REQUIRE(td.states.size() == tn.states.size());
        for (std::size_t k = 0; k < td.states.size(); k += 250) {
            const auto u = form.scale.to_nondim(td.states[k]);
            CHECK(u[0] == doctest::Approx(tn.states[k][0]).epsilon(1e-9));
            CHECK(u[1] == doctest::Approx(tn.states[k][1]).epsilon(1e-9));
        }
    }
}
