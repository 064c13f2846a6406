#include "royalty/export.hpp"

#include <fmt/format.h>

#include <utility>

namespace royalty {

std::string format_full(double value) { return fmt::format("{:.17g}", value); }

void write_curve_csv(std::ostream& os, const PosteriorCurve& curve) {
    os << "theta,pdf,cdf\n";
    for (std::size_t i = 0; i < curve.thetas.size(); ++i) {
        os << format_full(curve.thetas[i]) << ',' << format_full(curve.pdf[i]) << ','
           << format_full(curve.cdf[i]) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
    os << "model,risk,a,b,c,d,theta_hat\n";
    const auto prefix = fmt::format("{},{},{},{}", to_string(table.model), to_string(table.risk),
                                    format_full(table.a), format_full(table.b));
    for (const auto& series : table.series) {
        for (const auto& row : series.rows) {
            os << prefix << ',' << format_full(series.c) << ',' << format_full(row.d) << ','
               << format_full(row.theta_hat) << '\n';
        }
    }
}

void write_map_reference_csv(std::ostream& os, const SweepTable& table) {
    os << "d,theta_map\n";
    for (const auto& point : table.map_reference) {
        os << format_full(point.d) << ',' << format_full(point.theta_map) << '\n';
    }
}

void write_samples_csv(std::ostream& os, std::span<const double> samples) {
    os << "theta\n";
    for (double x : samples) os << format_full(x) << '\n';
}

nlohmann::ordered_json to_json(const EstimateResult& result) {
    nlohmann::ordered_json j;
    j["theta1"] = result.theta1;
    j["theta2"] = result.theta2;
    j["royalty_rate"] = result.royalty_rate ? nlohmann::ordered_json(*result.royalty_rate)
                                            : nlohmann::ordered_json(nullptr);
    j["overpayment_prob"] = result.overpayment_prob
                                ? nlohmann::ordered_json(*result.overpayment_prob)
                                : nlohmann::ordered_json(nullptr);
    j["method_note"] = result.method_note;
    return j;
}

nlohmann::ordered_json to_json(const PayoffBounds& bounds) {
    return {{"a", bounds.a()}, {"b", bounds.b()}, {"c", bounds.c()}, {"d", bounds.d()}};
}

nlohmann::ordered_json to_json(const SweepTable& table) {
    nlohmann::ordered_json j;
    j["model"] = std::string(to_string(table.model));
    j["risk"] = std::string(to_string(table.risk));
    j["a"] = table.a;
    j["b"] = table.b;
    j["series"] = nlohmann::ordered_json::array();
    for (const auto& series : table.series) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : series.rows) rows.push_back({{"d", row.d}, {"theta_hat", row.theta_hat}});
        j["series"].push_back({{"c", series.c}, {"rows", std::move(rows)}});
    }
    j["map_reference"] = nlohmann::ordered_json::array();
    for (const auto& point : table.map_reference) {
        j["map_reference"].push_back({{"d", point.d}, {"theta_map", point.theta_map}});
    }
    for (auto [key, cells] : {std::pair{"omitted", &table.omitted},
                              std::pair{"limits", &table.limits}}) {
        j[key] = nlohmann::ordered_json::array();
        for (const auto& cell : *cells) {
            j[key].push_back({{"c", cell.c}, {"d", cell.d}, {"reason", cell.reason}});
        }
    }
    return j;
}

nlohmann::ordered_json to_json(const SampleSummary& summary) {
    nlohmann::ordered_json j;
    j["n"] = summary.n;
    j["mean"] = summary.mean;
    j["std_error_of_mean"] = summary.std_error_of_mean;
    nlohmann::ordered_json quantiles = nlohmann::ordered_json::object();
    for (const auto& [p, q] : summary.quantiles) quantiles[fmt::format("{}", p)] = q;
    j["quantiles"] = std::move(quantiles);
    j["histogram_mode"] = summary.histogram_mode;
    j["bin_count"] = summary.bin_count;
    j["seed"] = summary.seed;
    return j;
}

}  // namespace royalty
