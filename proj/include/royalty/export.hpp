#pragma once

// CSV and JSON renderings of result types. CSV files carry a header row, LF
// line endings and 17 significant digits.

#include "royalty/estimators.hpp"
#include "royalty/monte_carlo.hpp"
#include "royalty/posterior.hpp"
#include "royalty/sweep.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>

namespace royalty {

std::string format_full(double value);

void write_curve_csv(std::ostream& os, const PosteriorCurve& curve);
void write_sweep_csv(std::ostream& os, const SweepTable& table);
void write_map_reference_csv(std::ostream& os, const SweepTable& table);
void write_samples_csv(std::ostream& os, std::span<const double> samples);

nlohmann::ordered_json to_json(const EstimateResult& result);
nlohmann::ordered_json to_json(const SweepTable& table);
nlohmann::ordered_json to_json(const SampleSummary& summary);
nlohmann::ordered_json to_json(const PayoffBounds& bounds);

}  // namespace royalty
