#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lvgame {

/// Locale-independent decimal parse of the whole field; nullopt on junk.
std::optional<double> parse_double(std::string_view text);

/// Shortest general-format rendering with at most `significant` digits,
/// always with '.' as the decimal point.
std::string format_number(double value, int significant = 6);

/// One non-blank line of simple comma-separated text (no quoting), fields trimmed.
struct CsvRow {
    std::size_t line = 0;  // 1-based
    std::vector<std::string_view> fields;
};

std::vector<CsvRow> split_csv(std::string_view text);

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace lvgame
