#pragma once

// Command-line front end. Subcommands:
//   estimate    point estimate, overpayment probability and royalty rate
//   posterior   density/CDF curve CSV plus the three numeric estimators
//   sweep       family-of-solutions table (CSV or JSON)
//   verify      closed forms vs quadrature vs Monte Carlo on random bounds
//   benchmark   the published 3 x 6 grid at a = 0, b = 0.2, c = 0, d = 0.8
//   simulate    Monte Carlo summary and optional samples CSV
//
// Exit codes: 0 success, 1 a check reported failure, 2 invalid input,
// 3 degenerate model, 4 file I/O, 5 unexpected internal failure.

#include "royalty/bargain.hpp"
#include "royalty/estimators.hpp"
#include "royalty/posterior.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace royalty::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kDegenerate = 3,
    kIoFailure = 4,
    kInternalError = 5,
};

/// Malformed flags or configuration. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable file. Maps to exit code 4.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario values as supplied by a config file or flags, before validation.
struct ScenarioInput {
    std::optional<double> a, b, c, d;
    std::optional<std::string> model;
    std::optional<std::string> risk;
    std::optional<double> operating_revenue, operating_cost;
    std::optional<double> p11, p12, p21, p22;
    std::optional<std::size_t> mc_n;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> grid_points;

    /// Fields set in `flags` replace those here.
    void overlay(const ScenarioInput& flags);
};

/// Parses a JSON scenario. Unknown keys and wrongly typed values raise
/// UsageError naming the field; syntax errors name the line and column.
ScenarioInput parse_config(const std::string& text);
ScenarioInput load_config(const std::filesystem::path& path);

struct ScenarioConfig {
    explicit ScenarioConfig(const PayoffBounds& b) : bounds(b) {}

    PayoffBounds bounds;
    ModelKind model = ModelKind::Case1;
    RiskProfile risk = RiskProfile::ABS;
    std::optional<FinancialStatement> financials;
    std::optional<PerceptionMatrix> perceptions;
    std::size_t mc_n = 1'000'000;
    std::uint64_t seed = 0;
    std::size_t grid_points = kDefaultGridPoints;

    /// Fixed-weight surface when perceptions are given, else the model.
    RoyaltySurface surface() const;
};

/// Case1 and ABS when unspecified; UsageError for unknown names.
ModelKind resolve_model(const std::optional<std::string>& text);
RiskProfile resolve_risk(const std::optional<std::string>& text);

/// Validates and fills defaults. Model Case1 and risk ABS when unspecified.
ScenarioConfig resolve(const ScenarioInput& input);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace royalty::cli
