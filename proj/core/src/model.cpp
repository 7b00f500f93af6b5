#include "lvgame/model.hpp"

#include <cmath>
#include <string>

#include "lvgame/errors.hpp"

namespace lvgame {

std::string_view to_string(Interaction mode) {
    return mode == Interaction::competitive ? "competitive" : "cooperative";
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::logistic: return "logistic";
        case ModelKind::competitive2: return "competitive2";
        case ModelKind::cooperative2: return "cooperative2";
        case ModelKind::predator_prey: return "predator_prey";
        case ModelKind::nplayer: return "nplayer";
        case ModelKind::nondim: return "nondim";
    }
    return "unknown";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// -1 for competitive, +1 for cooperative.
double coupling_sign(Interaction mode) { return mode == Interaction::competitive ? -1.0 : 1.0; }

void require(bool ok, const std::string& bound) {
    if (!ok) throw Error(ErrorKind::ParameterOutOfRange, bound);
}

void require_positive(double v, const std::string& name) {
    require(std::isfinite(v) && v > 0.0, name + " > 0");
}

void check(const LogisticParams& p) {
    require_positive(p.rho, "rho");
    require_positive(p.K, "K");
}

void check(const TwoPlayerParams& p) {
    require_positive(p.rho1, "rho1");
    require_positive(p.rho2, "rho2");
    require_positive(p.K1, "K1");
    require_positive(p.K2, "K2");
    require_positive(p.c1, "c1");
    require_positive(p.c2, "c2");
}

void check(const NondimParams& p) {
    require_positive(p.a12, "a12");
    require_positive(p.a21, "a21");
    require_positive(p.rho, "rho");
}

void check(const PredatorPreyParams& p) {
    const auto unit = [](double v, const std::string& name) {
        require(std::isfinite(v) && v > 0.0 && v <= 1.0, "0 < " + name + " <= 1");
    };
    unit(p.delta, "delta");
    unit(p.epsilon, "epsilon");
    unit(p.alpha, "alpha");
    unit(p.beta, "beta");
    require(p.delta > p.beta, "delta > beta");
    // Equality is admitted: the reference parameter set uses alpha == epsilon.
    require(p.alpha >= p.epsilon, "alpha >= epsilon");
}

void check(const NPlayerParams& p) {
    const std::size_t n = p.rho.size();
    if (n == 0) throw Error(ErrorKind::ParameterOutOfRange, "n >= 1");
    if (p.K.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "K has " + std::to_string(p.K.size()) + " entries, expected " + std::to_string(n));
    }
    if (p.C.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "C is " + std::to_string(p.C.size()) + "x" + std::to_string(p.C.size()) + ", expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = "[" + std::to_string(i + 1) + "]";
        require_positive(p.rho[i], "rho" + idx);
        require_positive(p.K[i], "K" + idx);
        for (std::size_t j = 0; j < n; ++j) {
            const double c = p.C(i, j);
            const auto name = "C[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
            if (i == j) {
                require(c == 0.0, name + " == 0");
            } else {
                require(std::isfinite(c) && c >= 0.0, name + " >= 0");
            }
        }
    }
}

void check_state(std::span<const double> state, std::size_t dim) {
    if (state.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "state has " + std::to_string(state.size()) + " components, model expects " + std::to_string(dim));
    }
}

}  // namespace

ModelKind ModelSpec::kind() const {
    return std::visit(overloaded{
                          [](const LogisticParams&) { return ModelKind::logistic; },
                          [](const TwoPlayerParams& p) {
                              return p.mode == Interaction::competitive ? ModelKind::competitive2 : ModelKind::cooperative2;
                          },
                          [](const NondimParams&) { return ModelKind::nondim; },
                          [](const PredatorPreyParams&) { return ModelKind::predator_prey; },
                          [](const NPlayerParams&) { return ModelKind::nplayer; },
                      },
                      params_);
}

std::size_t ModelSpec::dimension() const {
    return std::visit(overloaded{
                          [](const LogisticParams&) -> std::size_t { return 1; },
                          [](const NPlayerParams& p) -> std::size_t { return p.n(); },
                          [](const auto&) -> std::size_t { return 2; },
                      },
                      params_);
}

Model validate(ModelSpec spec) {
    std::visit([](const auto& p) { check(p); }, spec.params());
    return Model(std::move(spec));
}

State Model::derivative(std::span<const double> s) const {
    check_state(s, dimension());
    return std::visit(
        overloaded{
            [&](const LogisticParams& p) -> State { return {p.rho * s[0] * (1.0 - s[0] / p.K)}; },
            [&](const TwoPlayerParams& p) -> State {
                const double sg = coupling_sign(p.mode);
                return {p.rho1 * s[0] * (1.0 - s[0] / p.K1 + sg * p.c1 * s[1]),
                        p.rho2 * s[1] * (1.0 - s[1] / p.K2 + sg * p.c2 * s[0])};
            },
            [&](const NondimParams& p) -> State {
                const double sg = coupling_sign(p.mode);
                return {s[0] * (1.0 - s[0] + sg * p.a12 * s[1]), p.rho * s[1] * (1.0 - s[1] + sg * p.a21 * s[0])};
            },
            [&](const PredatorPreyParams& p) -> State {
                return {p.delta * s[0] - p.epsilon * s[0] * s[1], p.alpha * s[0] * s[1] - p.beta * s[1]};
            },
            [&](const NPlayerParams& p) -> State {
                const double sg = coupling_sign(p.mode);
                const std::size_t n = p.n();
                State out(n);
                for (std::size_t i = 0; i < n; ++i) {
                    double coupling = 0.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j != i) coupling += p.C(i, j) * s[j];
                    }
                    out[i] = p.rho[i] * s[i] * (1.0 - s[i] / p.K[i] + sg * coupling);
                }
                return out;
            },
        },
        spec_.params());
}

State ScaleRecord::to_nondim(std::span<const double> n) const {
    check_state(n, 2);
    return {n[0] / K1, n[1] / K2};
}

State ScaleRecord::to_dimensional(std::span<const double> u) const {
    check_state(u, 2);
    return {u[0] * K1, u[1] * K2};
}

NondimForm nondimensionalize(const TwoPlayerParams& params) {
    check(params);
    NondimForm out;
    out.params.a12 = params.c1 * params.K2;
    out.params.a21 = params.c2 * params.K1;
    out.params.rho = params.rho2 / params.rho1;
    out.params.mode = params.mode;
    out.scale = ScaleRecord{params.rho1, params.K1, params.K2};
    return out;
}

}  // namespace lvgame
