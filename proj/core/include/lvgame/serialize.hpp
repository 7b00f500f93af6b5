#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lvgame/market_data.hpp"
#include "lvgame/premium_game.hpp"
#include "lvgame/simulate.hpp"
#include "lvgame/stability.hpp"

namespace lvgame {

/// {coords, residual, kind, is_true_fixed_point, feasible, classification,
///  eigenvalues: [[re, im], ...], verdict, notes}
nlohmann::json to_json(const StabilityReport& report);

nlohmann::json to_json(const EquilibriumPoint& point);

/// {model, equilibria: [...], regime_case?}
nlohmann::json equilibria_document(const Model& model, const std::vector<StabilityReport>& reports,
                                   std::optional<RegimeCase> regime);

/// {nash_state, nash_premiums, claim_exposures, market_premiums,
///  below_market_players, max_premium_player, max_exposure_player, ...}
nlohmann::json to_json(const GameResult& result, const std::optional<ExposureAssociation>& association);

nlohmann::json to_json(const RegressionResult& r);
nlohmann::json to_json(const PremiumClaimReport& report);

/// Header `t,x1,...,xn`; every value rendered with `digits` significant digits.
std::string trajectory_csv(const Trajectory& traj, int digits = 6);

}  // namespace lvgame
