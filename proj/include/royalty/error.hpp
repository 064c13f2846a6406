#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace royalty {

enum class ErrorKind {
    OutOfRange,             // a fraction outside [0, 1]
    Disordered,             // lower bound above upper bound
    SurplusViolation,       // outside options exceed the whole pie
    InvalidFinancials,      // operating income not strictly positive
    InvalidArgument,        // malformed request (grid size, probabilities, ...)
    EmptySample,
    DegeneratePayoffs,      // Case 2 evaluated at d1 = d2 = 0
    DegenerateDistribution  // theta is deterministic, no density exists
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for the kinds caused by bad input values; false for model degeneracy.
constexpr bool is_validation_error(ErrorKind kind) noexcept {
    return kind != ErrorKind::DegeneratePayoffs &&
           kind != ErrorKind::DegenerateDistribution;
}

class RoyaltyError : public std::runtime_error {
public:
    RoyaltyError(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    /// Message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace royalty
