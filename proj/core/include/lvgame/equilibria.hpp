#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lvgame/model.hpp"

namespace lvgame {

inline constexpr double kDefaultResidualTol = 1e-10;

enum class PointKind { origin, axis, interior };

std::string_view to_string(PointKind kind);

struct EquilibriumPoint {
    State coords;
    double residual = 0.0;  // max-norm of the derivative at coords
    PointKind kind = PointKind::origin;
    bool is_true_fixed_point = false;
    bool feasible = true;  // all coordinates >= 0
};

struct FixedPointCheck {
    double residual = 0.0;
    bool is_fixed_point = false;
};

FixedPointCheck verify_fixed_point(const Model& model, std::span<const double> coords,
                                   double tol = kDefaultResidualTol);

/// Candidate steady points of a model family, each annotated with its residual.
///
/// - Nondim / two-player: (0,0), (1,0), (0,1) and the interior point
///   competitive ((1-a12)/(1-a12 a21), (1-a21)/(1-a12 a21)) or
///   cooperative ((1+a12)/(1-a12 a21), (1+a21)/(1-a12 a21)).
///   Dimensional two-player models are solved in nondimensional form and the
///   coordinates mapped back through the scale record.
/// - PredatorPrey: (0,0), (delta/alpha, 0), (0, delta/epsilon),
///   (beta/alpha, delta/epsilon). The two axis points are not genuine fixed
///   points of the dynamics; their residuals say so.
/// - Logistic: 0 and K.
///
/// Throws SingularInteraction when a12 a21 == 1, UnsupportedModel for n-player
/// specs (use interior_equilibrium_nplayer).
std::vector<EquilibriumPoint> enumerate_equilibria(const Model& model, double tol = kDefaultResidualTol);

/// Interior Nash point of an n-player game. Solves, in u_i = N_i / K_i,
///   u_i + sum_{j!=i} a_ij u_j = 1   (competitive)
///   u_i - sum_{j!=i} a_ij u_j = 1   (cooperative)
/// with a_ij = C(i,j) K_j, then returns N_i = K_i u_i with its residual.
/// Throws SingularInteraction (pivot < 1e-12) or InfeasibleEquilibrium
/// (negative component, 1-based index in the message).
EquilibriumPoint interior_equilibrium_nplayer(const Model& model, double tol = kDefaultResidualTol);

}  // namespace lvgame
