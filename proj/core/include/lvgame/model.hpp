#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>

#include "lvgame/linalg.hpp"

namespace lvgame {

/// Sign of the cross-coupling terms: competitive players suppress each other,
/// cooperative players boost each other.
enum class Interaction { competitive, cooperative };

std::string_view to_string(Interaction mode);

/// dN/dt = rho N (1 - N/K)
struct LogisticParams {
    double rho = 1.0;
    double K = 1.0;
};

/// dN1/dt = rho1 N1 (1 - N1/K1 -+ c1 N2), dN2/dt = rho2 N2 (1 - N2/K2 -+ c2 N1)
struct TwoPlayerParams {
    double rho1 = 1.0;
    double rho2 = 1.0;
    double K1 = 1.0;
    double K2 = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;
    Interaction mode = Interaction::competitive;
};

/// du1/dT = u1 (1 - u1 -+ a12 u2), du2/dT = rho u2 (1 - u2 -+ a21 u1)
struct NondimParams {
    double a12 = 0.0;
    double a21 = 0.0;
    double rho = 1.0;  // rho2 / rho1
    Interaction mode = Interaction::competitive;
};

/// dP/dt = delta p - epsilon p r, dR/dt = alpha p r - beta r
struct PredatorPreyParams {
    double delta = 1.0;
    double epsilon = 0.5;
    double alpha = 0.5;
    double beta = 0.25;
};

/// dN_i/dt = rho_i N_i (1 - N_i/K_i -+ sum_{j != i} C(i,j) N_j)
struct NPlayerParams {
    std::vector<double> rho;
    std::vector<double> K;
    Matrix C;  // C(i,j): pressure of player j on player i; zero diagonal
    Interaction mode = Interaction::competitive;

    std::size_t n() const noexcept { return rho.size(); }
};

enum class ModelKind { logistic, competitive2, cooperative2, predator_prey, nplayer, nondim };

std::string_view to_string(ModelKind kind);

/// Unvalidated model description; pass through `validate` before use.
class ModelSpec {
public:
    using Params = std::variant<LogisticParams, TwoPlayerParams, NondimParams, PredatorPreyParams, NPlayerParams>;

    ModelSpec(LogisticParams p) : params_(p) {}
    ModelSpec(TwoPlayerParams p) : params_(p) {}
    ModelSpec(NondimParams p) : params_(p) {}
    ModelSpec(PredatorPreyParams p) : params_(p) {}
    ModelSpec(NPlayerParams p) : params_(std::move(p)) {}

    ModelKind kind() const;
    std::size_t dimension() const;
    const Params& params() const noexcept { return params_; }

    template <class T>
    const T* get_if() const noexcept {
        return std::get_if<T>(&params_);
    }

private:
    Params params_;
};

/// A model whose parameters satisfy every range invariant. Only `validate`
/// constructs one, so holding a Model is proof the parameters were checked.
class Model {
public:
    const ModelSpec& spec() const noexcept { return spec_; }
    ModelKind kind() const { return spec_.kind(); }
    std::size_t dimension() const { return spec_.dimension(); }

    template <class T>
    const T* get_if() const noexcept {
        return spec_.get_if<T>();
    }

    /// Right-hand side of the model equations.
    State derivative(std::span<const double> state) const;

private:
    friend Model validate(ModelSpec spec);
    explicit Model(ModelSpec spec) : spec_(std::move(spec)) {}

    ModelSpec spec_;
};

/// Checks every parameter bound. Throws ParameterOutOfRange naming the
/// violated bound, or DimensionMismatch for inconsistent n-player vectors.
Model validate(ModelSpec spec);

inline State derivative(const Model& model, std::span<const double> state) {
    return model.derivative(state);
}

/// Time and state scales that relate a dimensional two-player model to its
/// nondimensional form: T = time_scale * t, u_i = N_i / K_i.
struct ScaleRecord {
    double time_scale = 1.0;
    double K1 = 1.0;
    double K2 = 1.0;

    State to_nondim(std::span<const double> n) const;
    State to_dimensional(std::span<const double> u) const;
};

struct NondimForm {
    NondimParams params;
    ScaleRecord scale;
};

/// a12 = c1 K2, a21 = c2 K1, rho = rho2 / rho1, T = rho1 t.
NondimForm nondimensionalize(const TwoPlayerParams& params);

}  // namespace lvgame
