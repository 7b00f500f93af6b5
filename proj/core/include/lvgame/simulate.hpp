#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lvgame/equilibria.hpp"
#include "lvgame/model.hpp"

namespace lvgame {

struct IntegrationConfig {
    double t_end = 100.0;
    double step = 1e-3;
    double blowup_threshold = 1e9;
    std::uint64_t seed = 0;
    double jitter = 0.0;  // portrait initial-condition jitter amplitude; 0 disables
};

/// Throws InvalidConfig when t_end <= 0, step outside (0, t_end] or threshold <= 0.
void validate_config(const IntegrationConfig& config);

enum class TrajectoryStatus { completed, blowup, invalid };

std::string_view to_string(TrajectoryStatus status);

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    TrajectoryStatus status = TrajectoryStatus::completed;
    double stop_time = 0.0;  // time of blow-up / invalid state, else the last sample time

    const State& final_state() const { return states.back(); }
};

/// Classical fixed-step RK4. Times are k * step for k = 0..floor(t_end/step).
/// Stops with `blowup` as soon as the state max-norm exceeds the threshold or
/// turns non-finite; the offending state is not recorded.
Trajectory integrate(const Model& model, std::span<const double> initial, const IntegrationConfig& config);

/// Initial conditions for a phase portrait: either an explicit list or a
/// uniform lattice (one axis range per state dimension).
struct AxisRange {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t count = 1;
};

struct PortraitGrid {
    std::vector<AxisRange> axes;
    std::vector<State> explicit_points;

    /// Row-major lattice (last axis fastest) or the explicit list verbatim.
    std::vector<State> initial_conditions() const;
};

/// One trajectory per grid point, in grid order. `threads` = 0 picks the
/// hardware concurrency; results are identical for every thread count.
std::vector<Trajectory> phase_portrait(const Model& model, const PortraitGrid& grid, const IntegrationConfig& config,
                                       unsigned threads = 0);

enum class AttractorKind { attractor, divergent, undecided };

struct AttractorResult {
    AttractorKind kind = AttractorKind::undecided;
    std::size_t index = 0;  // into the candidate list when kind == attractor
};

/// Nearest candidate (Euclidean) to the final state, accepted only if the
/// last 10% of samples all stay within `tol` of it.
AttractorResult detect_attractor(const Trajectory& traj, std::span<const EquilibriumPoint> candidates, double tol);

/// H(p, r) = alpha p - beta ln p + epsilon r - delta ln r, conserved by the
/// predator-prey dynamics.
double first_integral(const PredatorPreyParams& params, double p, double r);

/// max_t |H(t) - H(0)|. Throws NonPositiveState if any sample leaves the open
/// positive quadrant.
double first_integral_drift(const Trajectory& traj, const PredatorPreyParams& params);

}  // namespace lvgame
