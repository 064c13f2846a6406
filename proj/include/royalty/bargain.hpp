#pragma once

// Bargaining models for the normalized royalty.
//
// All money values are unitless nonnegative reals. After dividing by the
// operating income every quantity is a fraction of the pie:
//   d1, d2  normalized disagreement payoffs (outside options) of the
//           licensor (party 1) and licensee (party 2)
//   theta   party 1's share of operating income, theta = r / operating margin

#include <optional>
#include <string_view>

namespace royalty {

enum class ModelKind { OriginalNBS, Case1, Case2 };

std::string_view to_string(ModelKind model) noexcept;
/// Accepts "NBS", "OriginalNBS", "Case1", "Case2" (case-insensitive, '_'/'-'
/// and spaces ignored). Returns nullopt for anything else.
std::optional<ModelKind> parse_model_kind(std::string_view text) noexcept;

inline constexpr ModelKind kAllModels[] = {ModelKind::OriginalNBS, ModelKind::Case1,
                                           ModelKind::Case2};

class FinancialStatement {
public:
    /// Throws InvalidFinancials unless revenue > cost >= 0.
    static FinancialStatement make(double operating_revenue, double operating_cost);

    double operating_revenue() const noexcept { return revenue_; }
    double operating_cost() const noexcept { return cost_; }
    double operating_income() const noexcept { return revenue_ - cost_; }
    double operating_margin() const noexcept { return (revenue_ - cost_) / revenue_; }

private:
    FinancialStatement(double revenue, double cost) : revenue_(revenue), cost_(cost) {}
    double revenue_;
    double cost_;
};

class NormalizedPayoffs {
public:
    /// Throws OutOfRange for values outside [0,1], SurplusViolation if d1 + d2 > 1.
    static NormalizedPayoffs make(double d1, double d2);

    double d1() const noexcept { return d1_; }
    double d2() const noexcept { return d2_; }
    NormalizedPayoffs swapped() const noexcept { return {d2_, d1_}; }

private:
    NormalizedPayoffs(double d1, double d2) : d1_(d1), d2_(d2) {}
    double d1_;
    double d2_;
};

/// P_mn is party m's bargaining strength as perceived by party n.
struct PerceptionMatrix {
    double p11 = 0.5;
    double p12 = 0.5;
    double p21 = 0.5;
    double p22 = 0.5;

    /// Throws OutOfRange if any entry is outside [0,1].
    void validate() const;
};

/// Uniform disagreement-payoff bounds: d1 ~ U[a,b], d2 ~ U[c,d].
class PayoffBounds {
public:
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

    double width1() const noexcept { return b_ - a_; }
    double width2() const noexcept { return d_ - c_; }

    /// Party roles exchanged: (a,b,c,d) -> (c,d,a,b). Always valid.
    PayoffBounds swapped() const noexcept { return {c_, d_, a_, b_}; }

    friend bool operator==(const PayoffBounds&, const PayoffBounds&) = default;
    friend PayoffBounds validate_bounds(double a, double b, double c, double d);

private:
    PayoffBounds(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
    double a_;
    double b_;
    double c_;
    double d_;
};

/// Checks 0 <= a <= b <= 1, 0 <= c <= d <= 1 and b + d <= 1.
/// Degenerate intervals (a == b, c == d) are accepted.
PayoffBounds validate_bounds(double a, double b, double c, double d);

struct ProfitPartition {
    double pi1;
    double pi2;
};

/// Bargaining weight of party 1 from the four perceived strengths.
double alpha_from_perceptions(const PerceptionMatrix& p);

/// Weight when each side's perceived strength equals its outside option.
double alpha_case1(NormalizedPayoffs d) noexcept;

/// Weight proportional to outside options. Throws DegeneratePayoffs at (0,0).
double alpha_case2(NormalizedPayoffs d);

/// Royalty for an arbitrary weight: d1 + alpha * (1 - d1 - d2).
double theta_general(NormalizedPayoffs d, double alpha);

/// Royalty under one of the three bargaining models.
double theta_model(ModelKind model, NormalizedPayoffs d);

/// Unchecked evaluation used by the numeric engines. Case 2 at (0,0) yields NaN.
double theta_raw(ModelKind model, double d1, double d2) noexcept;

/// Split of the operating income oi given absolute outside options.
ProfitPartition optimal_partition(double oi, double d1_abs, double d2_abs, double alpha);

/// Royalty rate on revenue, r = theta * operating margin.
double royalty_rate(double theta, const FinancialStatement& fs);

/// Party 2's share implied by party 1's.
double party2_share(double theta1);

}  // namespace royalty
