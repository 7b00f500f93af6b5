#include "lvgame/premium_game.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "lvgame/equilibria.hpp"
#include "lvgame/errors.hpp"
#include "lvgame/text.hpp"

namespace lvgame {

std::vector<std::size_t> GameResult::below_market_players() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < at_or_above_market.size(); ++i) {
        if (!at_or_above_market[i]) out.push_back(i + 1);
    }
    return out;
}

GameResult nash_premiums(const Model& model, const PremiumMapping& mapping) {
    const auto* p = model.get_if<NPlayerParams>();
    if (p == nullptr) throw Error(ErrorKind::UnsupportedModel, "the premium game needs an n-player model");
    if (!(mapping.scale > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "scale > 0");
    if (!(mapping.claim_scale > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "claim_scale > 0");
    const std::size_t n = p->n();
    if (!mapping.exposure_weights.empty() && mapping.exposure_weights.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "exposure_weights needs one entry per player");
    }

    const auto eq = interior_equilibrium_nplayer(model);
    GameResult r;
    r.nash_state.resize(n);
    r.nash_premiums.resize(n);
    r.claim_exposures.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = eq.coords[i] / p->K[i];
        const double w = mapping.exposure_weights.empty() ? 1.0 : mapping.exposure_weights[i];
        r.nash_state[i] = u;
        r.nash_premiums[i] = mapping.base + mapping.scale * u;
        r.claim_exposures[i] = mapping.claim_base + mapping.claim_scale * w * u;
    }
    return r;
}

GameResult compare_to_market(GameResult result, std::span<const double> market) {
    if (market.size() != result.players()) {
        throw Error(ErrorKind::DimensionMismatch, "market has " + std::to_string(market.size()) + " premiums for " +
                                                      std::to_string(result.players()) + " players");
    }
    result.market_premiums.assign(market.begin(), market.end());
    result.at_or_above_market.resize(market.size());
    for (std::size_t i = 0; i < market.size(); ++i) {
        result.at_or_above_market[i] = result.nash_premiums[i] >= market[i];
    }
    return result;
}

namespace {

// Average ranks, 1-based.
std::vector<double> ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

template <class Better>
std::size_t extremal(std::span<const double> v, Better better, std::string& note, const char* label) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (better(v[i], v[best])) best = i;
    }
    const auto ties = std::count(v.begin(), v.end(), v[best]);
    if (ties > 1) {
        if (!note.empty()) note += "; ";
        note += std::string(label) + " tied across " + std::to_string(ties) + " players, lowest index reported";
    }
    return best + 1;
}

}  // namespace

ExposureAssociation exposure_premium_association(const GameResult& result) {
    const auto& prem = result.nash_premiums;
    const auto& expo = result.claim_exposures;
    if (prem.size() < 2) throw Error(ErrorKind::ParameterOutOfRange, "n >= 2");
    if (expo.size() != prem.size()) throw Error(ErrorKind::DimensionMismatch, "one claim exposure per player");

    ExposureAssociation a;
    a.max_premium_player = extremal(prem, std::greater<>{}, a.note, "max premium");
    a.max_exposure_player = extremal(expo, std::greater<>{}, a.note, "max exposure");
    a.min_premium_player = extremal(prem, std::less<>{}, a.note, "min premium");

    const auto rp = ranks(prem);
    const auto re = ranks(expo);
    if (const auto rho = pearson(rp, re)) {
        a.spearman = *rho;
        a.correlation_sign = *rho > 0.0 ? 1 : (*rho < 0.0 ? -1 : 0);
    } else {
        if (!a.note.empty()) a.note += "; ";
        a.note += "rank correlation undefined (constant series)";
    }
    return a;
}

namespace {

[[noreturn]] void table_error(std::size_t line, std::size_t col, const std::string& what) {
    throw Error(ErrorKind::ParseError, "row " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

// Validates the header against `expected` (prefix of columns, `optional_from`
// onwards may be missing) and returns the data rows as numbers.
std::vector<std::vector<double>> numeric_table(std::string_view text, const std::vector<std::string_view>& expected,
                                               std::size_t optional_from) {
    const auto rows = split_csv(text);
    if (rows.empty()) table_error(1, 1, "missing header");
    const auto& header = rows.front().fields;
    if (header.size() < optional_from || header.size() > expected.size()) {
        table_error(rows.front().line, 1, "unexpected column count in header");
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] != expected[c]) {
            table_error(rows.front().line, c + 1, "expected column '" + std::string(expected[c]) + "'");
        }
    }
    std::vector<std::vector<double>> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != header.size()) {
            table_error(row.line, row.fields.size(), "expected " + std::to_string(header.size()) + " fields");
        }
        std::vector<double> values;
        for (std::size_t c = 0; c < row.fields.size(); ++c) {
            const auto v = parse_double(row.fields[c]);
            if (!v) table_error(row.line, c + 1, "not a number");
            values.push_back(*v);
        }
        if (values[0] != static_cast<double>(out.size() + 1)) {
            table_error(row.line, 1, "players must be numbered 1..n in order");
        }
        out.push_back(std::move(values));
    }
    if (out.empty()) throw Error(ErrorKind::EmptySeries, "no player rows");
    return out;
}

}  // namespace

MarketPremiums parse_market_premiums(std::string_view csv_text) {
    const auto rows = numeric_table(csv_text, {"player", "market_premium", "claim_exposure"}, 2);
    MarketPremiums m;
    for (const auto& r : rows) {
        m.premiums.push_back(r[1]);
        if (r.size() > 2) m.claim_exposures.push_back(r[2]);
    }
    return m;
}

PremiumTable parse_premium_table(std::string_view csv_text) {
    const auto rows = numeric_table(
        csv_text, {"player", "nash_premium", "nash_claim_exposure", "market_premium", "market_claim_exposure"}, 5);
    PremiumTable t;
    std::vector<double> market;
    for (const auto& r : rows) {
        t.result.nash_premiums.push_back(r[1]);
        t.result.claim_exposures.push_back(r[2]);
        market.push_back(r[3]);
        t.market_claim_exposures.push_back(r[4]);
    }
    t.result = compare_to_market(std::move(t.result), market);
    return t;
}

}  // namespace lvgame
