#pragma once

// Cross-validation of the closed-form estimators against the quadrature and
// Monte Carlo engines over randomly drawn bounds.

#include "royalty/bargain.hpp"
#include "royalty/estimators.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace royalty {

struct VerifyOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    std::size_t mc_n = 100'000;
    double lo = 0.0;  // region every bound is drawn from
    double hi = 1.0;
    unsigned threads = 1;
};

/// `n` valid tuples with every bound in [lo, hi]. Besides generic tuples the
/// sequence cycles through a = lo, a = c = lo, a = b, c = d and a = b = lo, so
/// the zero-corner and point-mass branches are always exercised.
std::vector<PayoffBounds> sample_bounds(std::size_t n, std::uint64_t seed, double lo = 0.0,
                                        double hi = 1.0);

/// True where the closed form is an exact identity rather than an approximation.
bool closed_form_is_exact(ModelKind model, RiskProfile risk) noexcept;

struct DiscrepancyStat {
    ModelKind model;
    RiskProfile risk;
    bool exact;
    std::size_t evaluated = 0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    std::optional<PayoffBounds> worst;  // max_rel tuple for approximations, else max_abs
};

struct MonteCarloStat {
    ModelKind model;
    std::size_t evaluated = 0;
    std::size_t within_4se = 0;
    double max_z = 0.0;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<DiscrepancyStat> discrepancies;  // model-major, then MAP, ABS, MSE
    std::vector<MonteCarloStat> monte_carlo;
    std::size_t degenerate_skipped = 0;

    static constexpr double kExactTolerance = 1e-5;
    static constexpr double kApproximationTolerance = 0.04;

    double max_exact_discrepancy() const noexcept;
    /// Case 1 ABS relative to the numeric median.
    double case1_abs_max_relative() const noexcept;
    bool passed() const noexcept;
};

/// Throws InvalidArgument for samples == 0, mc_n < 2 or an empty region.
VerifyReport run_verify(const VerifyOptions& options);

/// Fixed-format text; identical for identical options regardless of threads.
std::string render_report(const VerifyReport& report);

}  // namespace royalty
