#include "royalty/bargain.hpp"

#include "royalty/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

namespace royalty {

namespace {

// b + d and d1 + d2 sums of decimal inputs such as 0.35 + 0.65 can land one
// ulp above 1.
constexpr double kSumSlack = 1e-12;

void require_fraction(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw RoyaltyError(ErrorKind::OutOfRange,
                           fmt::format("{} = {} must lie in [0, 1]", name, value));
    }
}

}  // namespace

std::string_view to_string(ModelKind model) noexcept {
    switch (model) {
        case ModelKind::OriginalNBS: return "NBS";
        case ModelKind::Case1: return "Case1";
        case ModelKind::Case2: return "Case2";
    }
    return "?";
}

std::optional<ModelKind> parse_model_kind(std::string_view text) noexcept {
    std::string key;
    for (char ch : text) {
        if (ch == '_' || ch == '-' || ch == ' ') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (key == "nbs" || key == "originalnbs" || key == "original") return ModelKind::OriginalNBS;
    if (key == "case1" || key == "1") return ModelKind::Case1;
    if (key == "case2" || key == "2") return ModelKind::Case2;
    return std::nullopt;
}

FinancialStatement FinancialStatement::make(double operating_revenue, double operating_cost) {
    if (!std::isfinite(operating_revenue) || !std::isfinite(operating_cost) ||
        operating_revenue < 0.0 || operating_cost < 0.0) {
        throw RoyaltyError(ErrorKind::InvalidFinancials,
                           fmt::format("operating_revenue = {} and operating_cost = {} must be "
                                       "finite and nonnegative",
                                       operating_revenue, operating_cost));
    }
    if (!(operating_revenue > operating_cost)) {
        throw RoyaltyError(ErrorKind::InvalidFinancials,
                           fmt::format("operating income {} - {} must be strictly positive",
                                       operating_revenue, operating_cost));
    }
    return FinancialStatement(operating_revenue, operating_cost);
}

NormalizedPayoffs NormalizedPayoffs::make(double d1, double d2) {
    require_fraction(d1, "d1");
    require_fraction(d2, "d2");
    if (d1 + d2 > 1.0 + kSumSlack) {
        throw RoyaltyError(ErrorKind::SurplusViolation,
                           fmt::format("d1 + d2 = {} exceeds 1 (constraint d1 + d2 <= 1)", d1 + d2));
    }
    return NormalizedPayoffs(d1, d2);
}

void PerceptionMatrix::validate() const {
    require_fraction(p11, "p11");
    require_fraction(p12, "p12");
    require_fraction(p21, "p21");
    require_fraction(p22, "p22");
}

PayoffBounds validate_bounds(double a, double b, double c, double d) {
    require_fraction(a, "a");
    require_fraction(b, "b");
    require_fraction(c, "c");
    require_fraction(d, "d");
    if (a > b) {
        throw RoyaltyError(ErrorKind::Disordered,
                           fmt::format("a = {} exceeds b = {} (constraint 0 <= a <= b <= 1)", a, b));
    }
    if (c > d) {
        throw RoyaltyError(ErrorKind::Disordered,
                           fmt::format("c = {} exceeds d = {} (constraint 0 <= c <= d <= 1)", c, d));
    }
    if (b + d > 1.0 + kSumSlack) {
        throw RoyaltyError(ErrorKind::SurplusViolation,
                           fmt::format("b + d = {} exceeds 1 (constraint b + d <= 1)", b + d));
    }
    return PayoffBounds(a, b, c, d);
}

double alpha_from_perceptions(const PerceptionMatrix& p) {
    p.validate();
    return 0.5 + ((p.p11 + p.p12) - (p.p21 + p.p22)) / 4.0;
}

double alpha_case1(NormalizedPayoffs d) noexcept { return 0.5 + (d.d1() - d.d2()) / 2.0; }

double alpha_case2(NormalizedPayoffs d) {
    if (d.d1() == 0.0 && d.d2() == 0.0) {
        throw RoyaltyError(ErrorKind::DegeneratePayoffs,
                           "Case 2 weight d1 / (d1 + d2) is undefined at d1 = d2 = 0");
    }
    return d.d1() / (d.d1() + d.d2());
}

double theta_general(NormalizedPayoffs d, double alpha) {
    require_fraction(alpha, "alpha");
    return d.d1() + alpha * (1.0 - d.d1() - d.d2());
}

double theta_raw(ModelKind model, double d1, double d2) noexcept {
    switch (model) {
        case ModelKind::OriginalNBS:
            return 0.5 + (d1 - d2) / 2.0;
        case ModelKind::Case1: {
            // (d2^2 - d1^2 + 2(d1 - d2) + 1) / 2 written around the (1,1) corner.
            const double u = 1.0 - d1;
            const double v = 1.0 - d2;
            return (1.0 + v * v - u * u) / 2.0;
        }
        case ModelKind::Case2: {
            const double sum = d1 + d2;
            return sum > 0.0 ? d1 / sum : std::numeric_limits<double>::quiet_NaN();
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double theta_model(ModelKind model, NormalizedPayoffs d) {
    if (model == ModelKind::Case2 && d.d1() == 0.0 && d.d2() == 0.0) {
        throw RoyaltyError(ErrorKind::DegeneratePayoffs,
                           "Case 2 royalty d1 / (d1 + d2) is undefined at d1 = d2 = 0");
    }
    return theta_raw(model, d.d1(), d.d2());
}

ProfitPartition optimal_partition(double oi, double d1_abs, double d2_abs, double alpha) {
    if (!std::isfinite(oi) || !(oi > 0.0)) {
        throw RoyaltyError(ErrorKind::InvalidFinancials,
                           fmt::format("operating income {} must be strictly positive", oi));
    }
    if (!std::isfinite(d1_abs) || !std::isfinite(d2_abs) || d1_abs < 0.0 || d2_abs < 0.0) {
        throw RoyaltyError(ErrorKind::OutOfRange,
                           fmt::format("disagreement payoffs ({}, {}) must be nonnegative",
                                       d1_abs, d2_abs));
    }
    require_fraction(alpha, "alpha");
    const double surplus = oi - d1_abs - d2_abs;
    if (surplus < -kSumSlack * oi) {
        throw RoyaltyError(ErrorKind::SurplusViolation,
                           fmt::format("d1 + d2 = {} exceeds operating income {}",
                                       d1_abs + d2_abs, oi));
    }
    const double pi1 = d1_abs + alpha * surplus;
    return {pi1, oi - pi1};
}

double royalty_rate(double theta, const FinancialStatement& fs) {
    require_fraction(theta, "theta");
    return theta * fs.operating_margin();
}

double party2_share(double theta1) {
    require_fraction(theta1, "theta1");
    return 1.0 - theta1;
}

}  // namespace royalty
