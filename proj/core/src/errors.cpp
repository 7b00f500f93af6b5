#include "lvgame/errors.hpp"

namespace lvgame {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SingularInteraction: return "SingularInteraction";
        case ErrorKind::InfeasibleEquilibrium: return "InfeasibleEquilibrium";
        case ErrorKind::UnsupportedModel: return "UnsupportedModel";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::NonPositiveState: return "NonPositiveState";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonMonotoneYears: return "NonMonotoneYears";
        case ErrorKind::EmptySeries: return "EmptySeries";
        case ErrorKind::DegenerateDesign: return "DegenerateDesign";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace lvgame
