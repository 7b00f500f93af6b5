#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lvgame/model.hpp"

namespace lvgame {

/// Affine map from equilibrium shares u_i to currency:
///   premium_i = base + scale * u_i
///   claim_exposure_i = claim_base + claim_scale * weight_i * u_i
/// An empty `exposure_weights` means weight 1 for every player.
struct PremiumMapping {
    double base = 0.0;
    double scale = 300.0;
    double claim_base = 0.0;
    double claim_scale = 10000.0;
    std::vector<double> exposure_weights;
};

/// Players are reported 1-based everywhere.
struct GameResult {
    State nash_state;  // u_i = N_i / K_i at the interior equilibrium
    std::vector<double> nash_premiums;
    std::vector<double> claim_exposures;
    std::vector<double> market_premiums;      // empty until compare_to_market
    std::vector<bool> at_or_above_market;     // nash_premium >= market_premium

    std::size_t players() const noexcept { return nash_premiums.size(); }
    /// 1-based players whose Nash premium is strictly below market.
    std::vector<std::size_t> below_market_players() const;
};

/// Solves the interior equilibrium of the n-player game and prices it.
/// Propagates SingularInteraction / InfeasibleEquilibrium.
GameResult nash_premiums(const Model& model, const PremiumMapping& mapping);

/// Fills market premiums and per-player comparison flags. Throws
/// DimensionMismatch when the market vector length differs from n.
GameResult compare_to_market(GameResult result, std::span<const double> market);

struct ExposureAssociation {
    std::size_t max_premium_player = 0;   // 1-based
    std::size_t max_exposure_player = 0;  // 1-based
    std::size_t min_premium_player = 0;   // 1-based
    int correlation_sign = 0;             // sign of Spearman's rho; 0 when undefined
    double spearman = 0.0;
    std::string note;                     // ties and degenerate cases
};

/// Extremal players and the rank-correlation sign between premiums and claim
/// exposures. Ties resolve to the lowest index and are listed in `note`.
ExposureAssociation exposure_premium_association(const GameResult& result);

/// Rows of `player,market_premium[,claim_exposure]`, players 1..n in order.
struct MarketPremiums {
    std::vector<double> premiums;
    std::vector<double> claim_exposures;  // empty when the column is absent
};

/// Throws ParseError on malformed rows or out-of-order player numbers.
MarketPremiums parse_market_premiums(std::string_view csv_text);

/// Rows of `player,nash_premium,nash_claim_exposure,market_premium,market_claim_exposure`:
/// a published Nash/market table, returned already compared against market.
struct PremiumTable {
    GameResult result;
    std::vector<double> market_claim_exposures;
};

PremiumTable parse_premium_table(std::string_view csv_text);

}  // namespace lvgame
