#include "royalty/sweep.hpp"

#include "royalty/detail/parallel.hpp"
#include "royalty/error.hpp"
#include "royalty/posterior.hpp"

#include <cctype>
#include <cmath>

#include <fmt/format.h>

namespace royalty {

std::string_view to_string(SweepEngine engine) noexcept {
    return engine == SweepEngine::ClosedForm ? "closed_form" : "numeric";
}

std::optional<SweepEngine> parse_sweep_engine(std::string_view text) noexcept {
    std::string key;
    for (char ch : text) {
        if (ch == '-') ch = '_';
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (key == "closed_form" || key == "closed") return SweepEngine::ClosedForm;
    if (key == "numeric") return SweepEngine::Numeric;
    return std::nullopt;
}

std::vector<double> default_d_grid(double b) {
    std::vector<double> grid;
    // Integer steps avoid accumulating 0.01 increments past 1 - b.
    for (int i = 0; i <= 100; ++i) {
        const double d = i / 100.0;
        if (b + d > 1.0 + 1e-12) break;
        grid.push_back(d);
    }
    return grid;
}

std::vector<double> default_c_values() {
    std::vector<double> values;
    for (int i = 0; i <= 7; ++i) values.push_back(i / 10.0);
    return values;
}

double numeric_estimate(const RoyaltySurface& surface, RiskProfile risk,
                        const PayoffBounds& bounds) {
    switch (risk) {
        case RiskProfile::ABS: return numeric_median(surface, bounds);
        case RiskProfile::MAP: return numeric_mode(surface, bounds).theta;
        case RiskProfile::MSE: return numeric_mean(surface, bounds);
    }
    throw RoyaltyError(ErrorKind::InvalidArgument, "unknown risk profile");
}

SweepTable family_sweep(ModelKind model, RiskProfile risk, double a, double b,
                        std::span<const double> c_values, std::span<const double> d_grid,
                        SweepEngine engine, unsigned threads) {
    for (std::size_t i = 1; i < d_grid.size(); ++i) {
        if (!(d_grid[i] > d_grid[i - 1])) {
            throw RoyaltyError(ErrorKind::InvalidArgument,
                               "d grid must be strictly increasing");
        }
    }

    struct Cell {
        std::size_t series;
        double c;
        double d;
        std::optional<PayoffBounds> bounds;
        double theta = 0.0;
        std::string omitted_reason;
    };
    std::vector<Cell> cells;
    for (std::size_t s = 0; s < c_values.size(); ++s) {
        for (double d : d_grid) {
            if (d < c_values[s]) continue;
            Cell cell{s, c_values[s], d, std::nullopt, 0.0, {}};
            try {
                cell.bounds = validate_bounds(a, b, cell.c, d);
            } catch (const RoyaltyError& e) {
                throw RoyaltyError(e.kind(), fmt::format("sweep cell (c = {}, d = {}): {}",
                                                         cell.c, d, e.detail()));
            }
            cells.push_back(std::move(cell));
        }
    }

    detail::parallel_for(cells.size(), threads, [&](std::size_t i) {
        Cell& cell = cells[i];
        try {
            cell.theta = engine == SweepEngine::ClosedForm
                             ? estimate(model, risk, *cell.bounds).theta1
                             : numeric_estimate(model, risk, *cell.bounds);
        } catch (const RoyaltyError& e) {
            if (e.kind() != ErrorKind::DegeneratePayoffs) throw;
            cell.omitted_reason = e.detail();
        }
    });

    SweepTable table{model, risk, a, b, {}, {}, {}, {}};
    for (double c : c_values) table.series.push_back({c, {}});
    for (const Cell& cell : cells) {
        if (!cell.omitted_reason.empty()) {
            table.omitted.push_back({cell.c, cell.d, cell.omitted_reason});
            continue;
        }
        table.series[cell.series].rows.push_back({cell.d, cell.theta});
        if (model == ModelKind::Case2 && cell.d == 0.0) {
            table.limits.push_back({cell.c, cell.d,
                                    "d2 is fixed at 0, so theta = d1 / (d1 + d2) is 1 for every "
                                    "d1 > 0"});
        } else if (model == ModelKind::Case2 && b == 0.0) {
            table.limits.push_back({cell.c, cell.d,
                                    "d1 is fixed at 0, so theta = d1 / (d1 + d2) is 0 for every "
                                    "d2 > 0"});
        }
    }

    // MAP depends on (b, d) only; the lower bounds are irrelevant.
    for (double d : d_grid) {
        try {
            const PayoffBounds corner = validate_bounds(a, b, 0.0, d);
            table.map_reference.push_back({d, map_estimate(model, corner).theta1});
        } catch (const RoyaltyError& e) {
            if (e.kind() != ErrorKind::DegeneratePayoffs) {
                throw RoyaltyError(e.kind(),
                                   fmt::format("map reference (d = {}): {}", d, e.detail()));
            }
        }
    }
    return table;
}

}  // namespace royalty
