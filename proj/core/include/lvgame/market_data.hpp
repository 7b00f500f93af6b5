#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lvgame {

/// Annual net written premiums and net claims incurred (currency, millions).
struct MarketSeries {
    std::vector<int> years;
    std::vector<double> premiums;
    std::vector<double> claims;

    std::size_t size() const noexcept { return years.size(); }
};

/// Parses CSV text with header `year,net_written_premium,net_claims_incurred`.
/// Throws ParseError (with row/column), EmptySeries or NonMonotoneYears.
MarketSeries parse_series(std::string_view csv_text);

/// Reads and parses a series file. Throws IoError when the file cannot be read.
MarketSeries load_series(const std::filesystem::path& path);

enum class SeriesField { premiums, claims };

struct RegressionResult {
    double slope = 0.0;      // currency per calendar year
    double intercept = 0.0;  // value at year 0
    std::size_t n = 0;
};

/// Ordinary least squares of the field against the calendar year, computed on
/// centered years. Throws DegenerateDesign when all years coincide.
RegressionResult ols_slope(const MarketSeries& series, SeriesField field);

/// Same fit on raw vectors.
RegressionResult ols_fit(const std::vector<double>& x, const std::vector<double>& y);

struct PremiumClaimReport {
    RegressionResult premium;
    RegressionResult claim;
    double correlation = 0.0;  // Pearson, premiums vs claims
    int correlation_sign = 0;
    bool premiums_exceed_claims = false;  // in every year
    MarketSeries series;
};

PremiumClaimReport premium_claim_report(const MarketSeries& series);

/// Two-column plot table `year,premium,claim`.
std::string plot_csv(const MarketSeries& series);

}  // namespace lvgame
