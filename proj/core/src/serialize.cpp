#include "lvgame/serialize.hpp"

#include <algorithm>

#include "lvgame/text.hpp"

namespace lvgame {

using nlohmann::json;

json to_json(const EquilibriumPoint& p) {
    return {
        {"coords", p.coords},
        {"residual", p.residual},
        {"kind", to_string(p.kind)},
        {"is_true_fixed_point", p.is_true_fixed_point},
        {"feasible", p.feasible},
    };
}

json to_json(const StabilityReport& r) {
    json j = to_json(r.point);
    j["classification"] = to_string(r.point_class);
    j["linearized_class"] = to_string(r.linearized_class);
    json eig = json::array();
    for (const auto& l : r.eigen.values) eig.push_back({l.real(), l.imag()});
    j["eigenvalues"] = std::move(eig);
    j["eigen_method"] = r.eigen.method == EigenMethod::closed_form_2x2 ? "closed-form-2x2" : "certificate";
    json jac = json::array();
    for (std::size_t i = 0; i < r.jacobian.entries.size(); ++i) {
        const auto row = r.jacobian.entries.row(i);
        jac.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["jacobian"] = std::move(jac);
    j["verdict"] = to_string(r.verdict);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

json equilibria_document(const Model& model, const std::vector<StabilityReport>& reports,
                         std::optional<RegimeCase> regime) {
    json doc;
    doc["model"] = to_string(model.kind());
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    doc["equilibria"] = std::move(list);
    if (regime) doc["regime_case"] = to_string(*regime);
    return doc;
}

json to_json(const GameResult& r, const std::optional<ExposureAssociation>& a) {
    json j;
    j["nash_state"] = r.nash_state;
    j["nash_premiums"] = r.nash_premiums;
    j["claim_exposures"] = r.claim_exposures;
    j["market_premiums"] = r.market_premiums;
    j["below_market_players"] = r.below_market_players();
    if (a) {
        j["max_premium_player"] = a->max_premium_player;
        j["max_exposure_player"] = a->max_exposure_player;
        j["min_premium_player"] = a->min_premium_player;
        j["premium_exposure_rank_correlation"] = a->spearman;
        j["premium_exposure_correlation_sign"] = a->correlation_sign;
        if (!a->note.empty()) j["association_note"] = a->note;
    }
    return j;
}

json to_json(const RegressionResult& r) {
    return {{"slope", r.slope}, {"intercept", r.intercept}, {"n", r.n}};
}

json to_json(const PremiumClaimReport& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.series.size(); ++i) {
        rows.push_back({{"year", r.series.years[i]}, {"premium", r.series.premiums[i]}, {"claim", r.series.claims[i]}});
    }
    return {
        {"regressor", "calendar year; intercept is the fitted value at year 0"},
        {"premium_regression", to_json(r.premium)},
        {"claim_regression", to_json(r.claim)},
        {"premium_claim_correlation", r.correlation},
        {"premium_claim_correlation_sign", r.correlation_sign},
        {"premiums_exceed_claims_every_year", r.premiums_exceed_claims},
        {"years", std::move(rows)},
    };
}

std::string trajectory_csv(const Trajectory& traj, int digits) {
    const std::size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
    std::string out = "t";
    for (std::size_t i = 1; i <= dim; ++i) out += ",x" + std::to_string(i);
    out += '\n';
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        out += format_number(traj.times[k], std::max(digits, 10));
        for (double v : traj.states[k]) {
            out += ',';
            out += format_number(v, digits);
        }
        out += '\n';
    }
    return out;
}

}  // namespace lvgame
