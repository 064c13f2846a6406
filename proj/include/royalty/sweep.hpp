#pragma once

#include "royalty/bargain.hpp"
#include "royalty/estimators.hpp"
#include "royalty/posterior.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace royalty {

enum class SweepEngine { ClosedForm, Numeric };

std::string_view to_string(SweepEngine engine) noexcept;
std::optional<SweepEngine> parse_sweep_engine(std::string_view text) noexcept;

struct SweepRow {
    double d;
    double theta_hat;
};

struct SweepSeries {
    double c;
    std::vector<SweepRow> rows;
};

struct MapReferencePoint {
    double d;
    double theta_map;
};

/// A grid cell singled out with a reason: omitted (no defined estimate) or a
/// Case 2 limit value where one party's outside option is pinned at 0.
struct FlaggedCell {
    double c;
    double d;
    std::string reason;
};

/// Estimate as a function of party 2's upper bound d, one series per lower bound c.
struct SweepTable {
    ModelKind model;
    RiskProfile risk;
    double a;
    double b;
    std::vector<SweepSeries> series;
    std::vector<MapReferencePoint> map_reference;
    std::vector<FlaggedCell> omitted;
    std::vector<FlaggedCell> limits;
};

/// 0, 0.01, ..., up to 1 - b.
std::vector<double> default_d_grid(double b);
/// 0, 0.1, ..., 0.7.
std::vector<double> default_c_values();

/// Cells with d < c are skipped. Throws the validation error of the first
/// invalid (a, b, c, d) with c and d named in the message.
SweepTable family_sweep(ModelKind model, RiskProfile risk, double a, double b,
                        std::span<const double> c_values, std::span<const double> d_grid,
                        SweepEngine engine = SweepEngine::ClosedForm, unsigned threads = 1);

/// Estimate through the posterior engine: median, mode or mean.
double numeric_estimate(const RoyaltySurface& surface, RiskProfile risk,
                        const PayoffBounds& bounds);

}  // namespace royalty
