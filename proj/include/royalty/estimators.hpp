#pragma once

#include "royalty/bargain.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace royalty {

/// Bayes cost the negotiators minimize.
///   ABS  absolute error, risk neutral   -> posterior median
///   MAP  uniform (hit-or-miss) cost     -> posterior mode
///   MSE  squared error, risk averse     -> posterior mean
enum class RiskProfile { ABS, MAP, MSE };

std::string_view to_string(RiskProfile risk) noexcept;
std::optional<RiskProfile> parse_risk_profile(std::string_view text) noexcept;

inline constexpr RiskProfile kAllRisks[] = {RiskProfile::MAP, RiskProfile::ABS,
                                            RiskProfile::MSE};

namespace method_note {
inline constexpr std::string_view kExact = "exact closed form";
inline constexpr std::string_view kApproximation = "closed-form approximation";
inline constexpr std::string_view kNumeric = "numeric";
}  // namespace method_note

struct EstimateResult {
    double theta1 = 0.0;
    double theta2 = 1.0;
    std::optional<double> royalty_rate;
    std::optional<double> overpayment_prob;
    std::string method_note;

    static EstimateResult from_theta(double theta1, std::string_view note);
    EstimateResult& with_financials(const FinancialStatement& fs);
};

/// Royalty at the upper-bound corner (b, d).
EstimateResult map_estimate(ModelKind model, const PayoffBounds& bounds);

/// Royalty at the mean payoffs ((a+b)/2, (c+d)/2). Exact median for NBS and
/// Case 2; an approximation of the median for Case 1.
EstimateResult abs_estimate(ModelKind model, const PayoffBounds& bounds);

/// Posterior mean of the royalty.
EstimateResult mse_estimate(ModelKind model, const PayoffBounds& bounds);

EstimateResult estimate(ModelKind model, RiskProfile risk, const PayoffBounds& bounds);

/// E{d1 / (d1 + d2)} for independent uniforms, including the point-mass limits.
double case2_mean(const PayoffBounds& bounds);

}  // namespace royalty
