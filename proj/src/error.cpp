#include "royalty/error.hpp"

namespace royalty {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::Disordered: return "Disordered";
        case ErrorKind::SurplusViolation: return "SurplusViolation";
        case ErrorKind::InvalidFinancials: return "InvalidFinancials";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::DegeneratePayoffs: return "DegeneratePayoffs";
        case ErrorKind::DegenerateDistribution: return "DegenerateDistribution";
    }
    return "Unknown";
}

RoyaltyError::RoyaltyError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

}  // namespace royalty
