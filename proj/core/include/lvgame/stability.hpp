#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lvgame/equilibria.hpp"
#include "lvgame/model.hpp"

namespace lvgame {

struct JacobianMatrix {
    Matrix entries;
    State at;
};

/// Analytic Jacobian of the model right-hand side at `coords`.
///
/// For the two-player nondimensional forms (sign s = -1 competitive, +1 cooperative):
///   [ 1 - 2u1 + s a12 u2        s a12 u1              ]
///   [ s rho a21 u2              rho (1 - 2u2 + s a21 u1) ]
/// For predator-prey: [[delta - eps r, -eps p], [alpha r, alpha p - beta]].
JacobianMatrix jacobian(const Model& model, std::span<const double> coords);

enum class EigenMethod { closed_form_2x2, certificate };

struct EigenPair {
    std::vector<std::complex<double>> values;
    EigenMethod method = EigenMethod::closed_form_2x2;
};

/// lambda = (tau +- sqrt(tau^2 - 4 det)) / 2, evaluated without cancellation.
/// Also accepts 1x1 matrices.
EigenPair eigenvalues_2x2(const Matrix& j);

enum class PointClass {
    saddle,
    stable_node,
    unstable_node,
    stable_spiral,
    unstable_spiral,
    center,
    degenerate,
    non_equilibrium,
    unclassified,  // n > 2: only a matrix certificate is available
};

std::string_view to_string(PointClass c);

/// True for node/spiral classes that attract nearby trajectories.
bool is_attracting(PointClass c);

/// Trace-determinant taxonomy of a 1x1 or 2x2 spectrum. A real part with
/// |re| <= zero_tol * max(1, |lambda|) counts as zero. Returns non_equilibrium
/// whenever the linearization point is not a genuine fixed point.
PointClass classify(const EigenPair& eigen, bool is_true_fixed_point, double zero_tol = 1e-12);

enum class RegimeCase { A, B, C, D, Boundary };

std::string_view to_string(RegimeCase c);

/// Competitive: A (a12<1, a21<1), B (both >1), C (a12<1<a21), D (a21<1<a12).
/// Cooperative: A (a12 a21 < 1), B (a12 a21 > 1). Equalities give Boundary.
RegimeCase regime_case(const NondimParams& params);

/// Definition 1: all off-diagonal entries non-negative.
bool cooperative_sign_check(const Matrix& j);

/// Definition 2: a positive d with a_ii d_i + sum_{j!=i} |a_ij| d_j < 0 for
/// every row. Found by iterative rescaling from d = 1; nullopt when no
/// witness appears within `max_iterations` sweeps.
std::optional<State> negative_diagonal_dominance(const Matrix& j, int max_iterations = 10000);

enum class StabilityVerdict { stable, unstable, undetermined };

std::string_view to_string(StabilityVerdict v);

/// Definition 3 (all eigenvalues with strictly negative real part). Exact for
/// n <= 2; for larger n, stable on a dominance witness, unstable when the trace
/// is positive or an isolated Gershgorin disc lies in the open right
/// half-plane, otherwise undetermined.
StabilityVerdict is_stable_matrix(const Matrix& j);

struct StabilityReport {
    EquilibriumPoint point;
    JacobianMatrix jacobian;
    EigenPair eigen;
    PointClass point_class = PointClass::non_equilibrium;
    PointClass linearized_class = PointClass::non_equilibrium;  // class implied by the spectrum alone
    StabilityVerdict verdict = StabilityVerdict::undetermined;
    std::string notes;
};

/// Jacobian, spectrum and class for one point. Models of dimension > 2 get a
/// certificate-based verdict and an empty eigenvalue list.
StabilityReport analyze_point(const Model& model, const EquilibriumPoint& point);

}  // namespace lvgame
