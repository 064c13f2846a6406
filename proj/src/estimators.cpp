#include "royalty/estimators.hpp"

#include "royalty/error.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

namespace royalty {

namespace {

// Below this rectangle area the four-corner log formula loses more than about
// 1e-9 to cancellation, so the narrow axis is integrated instead.
constexpr double kDirectFormulaMinArea = 1e-6;

// coef * ln(arg) with the 0 * ln(0) = 0 convention.
double weighted_log(double coef, double arg) {
    return coef == 0.0 ? 0.0 : coef * std::log(arg);
}

// E{x / (x + d2)} for d2 ~ U[c, d], c < d.
double mean_over_d2(double x, double c, double d) {
    if (x == 0.0) return 0.0;
    return x * std::log1p((d - c) / (x + c)) / (d - c);
}

// E{d1 / (d1 + y)} for d1 ~ U[a, b], a < b.
double mean_over_d1(double y, double a, double b) {
    if (y == 0.0) return 1.0;
    return 1.0 - y * std::log1p((b - a) / (a + y)) / (b - a);
}

void require_case2_defined(bool degenerate, const char* what) {
    if (degenerate) {
        throw RoyaltyError(ErrorKind::DegeneratePayoffs,
                           std::string("Case 2 ") + what +
                               " is undefined when all probability sits at d1 = d2 = 0");
    }
}

}  // namespace

std::string_view to_string(RiskProfile risk) noexcept {
    switch (risk) {
        case RiskProfile::ABS: return "ABS";
        case RiskProfile::MAP: return "MAP";
        case RiskProfile::MSE: return "MSE";
    }
    return "?";
}

std::optional<RiskProfile> parse_risk_profile(std::string_view text) noexcept {
    std::string key;
    for (char ch : text) key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (key == "ABS" || key == "MEDIAN") return RiskProfile::ABS;
    if (key == "MAP" || key == "UC" || key == "MODE") return RiskProfile::MAP;
    if (key == "MSE" || key == "SE" || key == "MEAN") return RiskProfile::MSE;
    return std::nullopt;
}

EstimateResult EstimateResult::from_theta(double theta1, std::string_view note) {
    EstimateResult result;
    result.theta1 = theta1;
    result.theta2 = 1.0 - theta1;
    result.method_note = std::string(note);
    return result;
}

EstimateResult& EstimateResult::with_financials(const FinancialStatement& fs) {
    royalty_rate = royalty::royalty_rate(theta1, fs);
    return *this;
}

EstimateResult map_estimate(ModelKind model, const PayoffBounds& bounds) {
    if (model == ModelKind::Case2) {
        require_case2_defined(bounds.b() + bounds.d() == 0.0, "MAP estimate b / (b + d)");
    }
    return EstimateResult::from_theta(theta_raw(model, bounds.b(), bounds.d()),
                                      method_note::kExact);
}

EstimateResult abs_estimate(ModelKind model, const PayoffBounds& bounds) {
    const double mean1 = (bounds.a() + bounds.b()) / 2.0;
    const double mean2 = (bounds.c() + bounds.d()) / 2.0;
    if (model == ModelKind::Case2) {
        require_case2_defined(mean1 + mean2 == 0.0, "ABS estimate (a + b) / (a + b + c + d)");
    }
    const auto note =
        model == ModelKind::Case1 ? method_note::kApproximation : method_note::kExact;
    return EstimateResult::from_theta(theta_raw(model, mean1, mean2), note);
}

double case2_mean(const PayoffBounds& bounds) {
    const double a = bounds.a();
    const double b = bounds.b();
    const double c = bounds.c();
    const double d = bounds.d();
    const double w1 = bounds.width1();
    const double w2 = bounds.width2();

    if (w1 == 0.0 && w2 == 0.0) {
        require_case2_defined(a + c == 0.0, "MSE estimate");
        return a / (a + c);
    }
    if (w1 == 0.0) return mean_over_d2(a, c, d);
    if (w2 == 0.0) return mean_over_d1(c, a, b);

    if (w1 * w2 >= kDirectFormulaMinArea) {
        const double numerator = weighted_log(a * a - c * c, a + c) +
                                 weighted_log(d * d - a * a, a + d) +
                                 weighted_log(c * c - b * b, b + c) +
                                 weighted_log(b * b - d * d, b + d) + (c - d) * (a - b);
        return numerator / (2.0 * (c - d) * (a - b));
    }

    using Gauss = boost::math::quadrature::gauss<double, 20>;
    if (w1 <= w2) {
        return Gauss::integrate([&](double x) { return mean_over_d2(x, c, d); }, a, b) / w1;
    }
    return Gauss::integrate([&](double y) { return mean_over_d1(y, a, b); }, c, d) / w2;
}

EstimateResult mse_estimate(ModelKind model, const PayoffBounds& bounds) {
    const double a = bounds.a();
    const double b = bounds.b();
    const double c = bounds.c();
    const double d = bounds.d();
    switch (model) {
        case ModelKind::OriginalNBS:
            // theta is linear in the payoffs, so the mean passes through.
            return EstimateResult::from_theta(theta_raw(model, (a + b) / 2.0, (c + d) / 2.0),
                                              method_note::kExact);
        case ModelKind::Case1: {
            const double mean1 = (a + b) / 2.0;
            const double mean2 = (c + d) / 2.0;
            const double second1 = (b - a) * (b - a) / 12.0 + mean1 * mean1;
            const double second2 = (d - c) * (d - c) / 12.0 + mean2 * mean2;
            const double theta = (second2 - second1 + 2.0 * (mean1 - mean2) + 1.0) / 2.0;
            return EstimateResult::from_theta(theta, method_note::kExact);
        }
        case ModelKind::Case2:
            return EstimateResult::from_theta(case2_mean(bounds), method_note::kExact);
    }
    throw RoyaltyError(ErrorKind::InvalidArgument, "unknown model");
}

EstimateResult estimate(ModelKind model, RiskProfile risk, const PayoffBounds& bounds) {
    switch (risk) {
        case RiskProfile::MAP: return map_estimate(model, bounds);
        case RiskProfile::ABS: return abs_estimate(model, bounds);
        case RiskProfile::MSE: return mse_estimate(model, bounds);
    }
    throw RoyaltyError(ErrorKind::InvalidArgument, "unknown risk profile");
}

}  // namespace royalty
