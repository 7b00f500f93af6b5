#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lvgame {

enum class ErrorKind {
    ParameterOutOfRange,
    DimensionMismatch,
    SingularInteraction,
    InfeasibleEquilibrium,
    UnsupportedModel,
    InvalidConfig,
    InvalidState,
    NonPositiveState,
    Overflow,
    ParseError,
    NonMonotoneYears,
    EmptySeries,
    DegenerateDesign,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception. `detail()` holds
/// the offending field or bound (e.g. "K > 0"), `what()` the full message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

    /// True for failures caused by bad input values rather than the filesystem.
    bool is_validation() const noexcept { return kind_ != ErrorKind::IoError; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace lvgame
