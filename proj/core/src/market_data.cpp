#include "lvgame/market_data.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "lvgame/errors.hpp"
#include "lvgame/text.hpp"

namespace lvgame {

namespace {

constexpr std::string_view kHeader = "year,net_written_premium,net_claims_incurred";

[[noreturn]] void parse_error(std::size_t row, std::size_t col, const std::string& what) {
    throw Error(ErrorKind::ParseError,
                "row " + std::to_string(row) + ", column " + std::to_string(col) + ": " + what);
}

}  // namespace

MarketSeries parse_series(std::string_view text) {
    const auto rows = split_csv(text);
    if (rows.empty()) parse_error(1, 1, "missing header");
    std::string header;
    for (auto f : rows.front().fields) {
        if (!header.empty()) header += ',';
        header += f;
    }
    if (header != kHeader) parse_error(rows.front().line, 1, "expected header '" + std::string(kHeader) + "'");

    MarketSeries s;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto row = rows[r].line;
        const auto& fields = rows[r].fields;
        if (fields.size() != 3) parse_error(row, fields.size(), "expected 3 fields, found " + std::to_string(fields.size()));
        int year = 0;
        const auto [yp, yec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), year);
        if (yec != std::errc{} || yp != fields[0].data() + fields[0].size()) parse_error(row, 1, "invalid year");
        const auto prem = parse_double(fields[1]);
        if (!prem) parse_error(row, 2, "invalid premium");
        const auto claim = parse_double(fields[2]);
        if (!claim) parse_error(row, 3, "invalid claim");
        if (!s.years.empty() && year <= s.years.back()) {
            throw Error(ErrorKind::NonMonotoneYears,
                        "year " + std::to_string(year) + " at row " + std::to_string(row) + " does not increase");
        }
        s.years.push_back(year);
        s.premiums.push_back(*prem);
        s.claims.push_back(*claim);
    }
    if (s.years.empty()) throw Error(ErrorKind::EmptySeries, "no observations");
    if (s.years.size() < 2) throw Error(ErrorKind::EmptySeries, "at least 2 observations required");
    return s;
}

MarketSeries load_series(const std::filesystem::path& path) {
    return parse_series(read_file(path));
}

RegressionResult ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "x and y lengths differ");
    if (x.size() < 2) throw Error(ErrorKind::EmptySeries, "at least 2 observations required");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw Error(ErrorKind::DegenerateDesign, "regressor has zero variance");
    RegressionResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.n = x.size();
    return r;
}

RegressionResult ols_slope(const MarketSeries& series, SeriesField field) {
    std::vector<double> x(series.years.begin(), series.years.end());
    return ols_fit(x, field == SeriesField::premiums ? series.premiums : series.claims);
}

PremiumClaimReport premium_claim_report(const MarketSeries& series) {
    PremiumClaimReport r;
    r.premium = ols_slope(series, SeriesField::premiums);
    r.claim = ols_slope(series, SeriesField::claims);
    r.series = series;

    const double n = static_cast<double>(series.size());
    const double mp = std::accumulate(series.premiums.begin(), series.premiums.end(), 0.0) / n;
    const double mc = std::accumulate(series.claims.begin(), series.claims.end(), 0.0) / n;
    double spc = 0.0, spp = 0.0, scc = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        spc += (series.premiums[i] - mp) * (series.claims[i] - mc);
        spp += (series.premiums[i] - mp) * (series.premiums[i] - mp);
        scc += (series.claims[i] - mc) * (series.claims[i] - mc);
    }
    r.correlation = (spp > 0.0 && scc > 0.0) ? spc / std::sqrt(spp * scc) : 0.0;
    r.correlation_sign = r.correlation > 0.0 ? 1 : (r.correlation < 0.0 ? -1 : 0);
    r.premiums_exceed_claims = true;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!(series.premiums[i] > series.claims[i])) r.premiums_exceed_claims = false;
    }
    return r;
}

std::string plot_csv(const MarketSeries& series) {
    std::string out = "year,premium,claim\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += std::to_string(series.years[i]);
        out += ',';
        out += format_number(series.premiums[i], 10);
        out += ',';
        out += format_number(series.claims[i], 10);
        out += '\n';
    }
    return out;
}

}  // namespace lvgame
