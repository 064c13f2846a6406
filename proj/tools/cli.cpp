#include "cli.hpp"

#include "royalty/error.hpp"
#include "royalty/export.hpp"
#include "royalty/monte_carlo.hpp"
#include "royalty/sweep.hpp"
#include "royalty/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace royalty::cli {

namespace {

using Json = nlohmann::json;

void reject_unknown_keys(const Json& object, std::string_view where,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (std::string_view key : allowed) known = known || item.key() == key;
        if (!known) {
            throw UsageError(where.empty()
                                 ? fmt::format("config: unknown key '{}'", item.key())
                                 : fmt::format("config: unknown key '{}.{}'", where, item.key()));
        }
    }
}

const Json& require_object(const Json& value, std::string_view field) {
    if (!value.is_object()) throw UsageError(fmt::format("config field '{}': expected an object", field));
    return value;
}

double number_field(const Json& value, std::string_view field) {
    if (!value.is_number()) throw UsageError(fmt::format("config field '{}': expected a number", field));
    return value.get<double>();
}

std::uint64_t count_field(const Json& value, std::string_view field) {
    if (!value.is_number_unsigned()) {
        throw UsageError(fmt::format("config field '{}': expected a nonnegative integer", field));
    }
    return value.get<std::uint64_t>();
}

std::string string_field(const Json& value, std::string_view field) {
    if (!value.is_string()) throw UsageError(fmt::format("config field '{}': expected a string", field));
    return value.get<std::string>();
}

template <typename T>
void take(std::optional<T>& target, const std::optional<T>& source) {
    if (source) target = source;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError(fmt::format("failed reading '{}'", path.string()));
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    body(file);
    file.flush();
    if (!file) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

std::string fixed3(double value) { return fmt::format("{:.3f}", value); }

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// Flags shared by the subcommands; each subcommand binds the subset it accepts.
struct Flags {
    ScenarioInput scenario;
    std::optional<std::string> config;
    std::optional<std::string> out;
    bool json = false;
    unsigned threads = 0;

    std::vector<double> c_values;
    std::vector<double> d_grid;
    std::string engine = "closed_form";
    std::string format = "csv";

    std::size_t samples = 200;
    std::uint64_t verify_seed = 7;
    std::size_t verify_mc_n = 100'000;
    double lo = 0.0;
    double hi = 1.0;
};

void add_model_options(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON scenario file");
    cmd->add_option("--model", f.scenario.model, "NBS, Case1 or Case2 (default Case1)");
    cmd->add_option("--risk", f.scenario.risk, "ABS, MAP or MSE (default ABS)");
    cmd->add_option("--a", f.scenario.a, "lower bound of party 1's outside option");
    cmd->add_option("--b", f.scenario.b, "upper bound of party 1's outside option");
    cmd->add_option("--threads", f.threads, "worker threads, 0 = all cores")->capture_default_str();
}

void add_scenario_options(CLI::App* cmd, Flags& f) {
    add_model_options(cmd, f);
    cmd->add_option("--c", f.scenario.c, "lower bound of party 2's outside option");
    cmd->add_option("--d", f.scenario.d, "upper bound of party 2's outside option");
    cmd->add_option("--or", f.scenario.operating_revenue, "operating revenue");
    cmd->add_option("--oc", f.scenario.operating_cost, "operating cost");
    cmd->add_option("--p11", f.scenario.p11, "party 1's strength as perceived by party 1");
    cmd->add_option("--p12", f.scenario.p12, "party 1's strength as perceived by party 2");
    cmd->add_option("--p21", f.scenario.p21, "party 2's strength as perceived by party 1");
    cmd->add_option("--p22", f.scenario.p22, "party 2's strength as perceived by party 2");
    cmd->add_option("--mc-n", f.scenario.mc_n, "Monte Carlo sample count");
    cmd->add_option("--seed", f.scenario.seed, "Monte Carlo seed");
    cmd->add_option("--grid-points", f.scenario.grid_points, "posterior grid resolution");
    cmd->add_flag("--json", f.json, "full-precision JSON output");
}

ScenarioInput gather(const Flags& f) {
    ScenarioInput input;
    if (f.config) input = load_config(*f.config);
    input.overlay(f.scenario);
    return input;
}

// ---- estimate -------------------------------------------------------------

int cmd_estimate(const Flags& f, std::ostream& out) {
    const ScenarioConfig cfg = resolve(gather(f));
    const RoyaltySurface surface = cfg.surface();
    EstimateResult result =
        cfg.perceptions
            ? EstimateResult::from_theta(numeric_estimate(surface, cfg.risk, cfg.bounds),
                                         method_note::kNumeric)
            : estimate(cfg.model, cfg.risk, cfg.bounds);
    result.overpayment_prob = cdf_at(surface, cfg.bounds, result.theta1);
    if (cfg.financials) result.with_financials(*cfg.financials);

    if (f.json) {
        out << json_text(to_json(result));
        return kOk;
    }
    std::string model(to_string(cfg.model));
    if (cfg.perceptions) model += fmt::format(" (alpha = {})", fixed3(*surface.alpha()));
    out << fmt::format("model               {}\n", model);
    out << fmt::format("risk                {}\n", to_string(cfg.risk));
    out << fmt::format("theta party 1       {}\n", fixed3(result.theta1));
    out << fmt::format("theta party 2       {}\n", fixed3(result.theta2));
    out << fmt::format("P{{theta <= est}}     {}\n", fixed3(*result.overpayment_prob));
    if (result.royalty_rate) out << fmt::format("royalty rate        {}\n", fixed3(*result.royalty_rate));
    out << fmt::format("method              {}\n", result.method_note);
    return kOk;
}

// ---- posterior ------------------------------------------------------------

int cmd_posterior(const Flags& f, std::ostream& out, std::ostream& err) {
    const ScenarioConfig cfg = resolve(gather(f));
    const RoyaltySurface surface = cfg.surface();
    const PosteriorCurve curve = pdf_curve(surface, cfg.bounds, cfg.grid_points, f.threads);
    const double median = numeric_median(surface, cfg.bounds);
    const ModeEstimate mode = numeric_mode(surface, cfg.bounds, cfg.grid_points);
    const double mean = numeric_mean(surface, cfg.bounds);
    const double p_median = cdf_at(surface, cfg.bounds, median);
    const double p_mode = cdf_at(surface, cfg.bounds, mode.theta);
    const double p_mean = cdf_at(surface, cfg.bounds, mean);

    write_file(*f.out, [&](std::ostream& os) { write_curve_csv(os, curve); });
    err << fmt::format("wrote {} grid points to {}\n", curve.thetas.size(), *f.out);

    if (f.json) {
        nlohmann::ordered_json j;
        j["median"] = {{"theta", median}, {"overpayment_prob", p_median}};
        j["mode"] = {{"theta", mode.theta},
                     {"overpayment_prob", p_mode},
                     {"plateau", mode.plateau},
                     {"corner_applied", mode.corner_applied}};
        j["mean"] = {{"theta", mean}, {"overpayment_prob", p_mean}};
        j["grid_points"] = cfg.grid_points;
        out << json_text(j);
        return kOk;
    }
    out << fmt::format("median  {}  P{{theta <= median}} {}\n", fixed3(median), fixed3(p_median));
    out << fmt::format("mode    {}  P{{theta <= mode}}   {}\n", fixed3(mode.theta), fixed3(p_mode));
    out << fmt::format("mean    {}  P{{theta <= mean}}   {}\n", fixed3(mean), fixed3(p_mean));
    return kOk;
}

// ---- sweep ----------------------------------------------------------------

std::filesystem::path map_reference_path(const std::filesystem::path& out) {
    return out.parent_path() / (out.stem().string() + "_map_reference.csv");
}

int cmd_sweep(const Flags& f, std::ostream& out, std::ostream& err) {
    const ScenarioInput input = gather(f);
    if (input.c || input.d) {
        throw UsageError("sweep takes --c-values and --d-grid; drop c and d from the scenario");
    }
    if (input.p11 || input.p12 || input.p21 || input.p22) {
        throw UsageError("sweep does not support perceptions");
    }
    if (input.operating_revenue || input.operating_cost) {
        throw UsageError("sweep does not use financials");
    }
    const double a = input.a.value_or(0.0);
    const double b = input.b.value_or(0.2);
    const ModelKind model = resolve_model(input.model);
    const RiskProfile risk = resolve_risk(input.risk);

    const auto engine = parse_sweep_engine(f.engine);
    if (!engine) {
        throw UsageError(fmt::format("--engine '{}' must be closed_form or numeric", f.engine));
    }
    if (f.format != "csv" && f.format != "json") {
        throw UsageError(fmt::format("--format '{}' must be csv or json", f.format));
    }
    const std::vector<double> c_values = f.c_values.empty() ? default_c_values() : f.c_values;
    const std::vector<double> d_grid = f.d_grid.empty() ? default_d_grid(b) : f.d_grid;

    const SweepTable table =
        family_sweep(model, risk, a, b, c_values, d_grid, *engine, f.threads);

    std::size_t rows = 0;
    for (const auto& series : table.series) rows += series.rows.size();
    const std::filesystem::path path = *f.out;
    if (f.format == "json") {
        write_file(path, [&](std::ostream& os) { os << json_text(to_json(table)); });
        err << fmt::format("wrote {} cells to {}\n", rows, path.string());
    } else {
        const auto reference = map_reference_path(path);
        write_file(path, [&](std::ostream& os) { write_sweep_csv(os, table); });
        write_file(reference, [&](std::ostream& os) { write_map_reference_csv(os, table); });
        err << fmt::format("wrote {} cells to {} and the MAP reference to {}\n", rows,
                           path.string(), reference.string());
    }
    for (const auto& cell : table.omitted) {
        err << fmt::format("omitted c={} d={}: {}\n", cell.c, cell.d, cell.reason);
    }
    for (const auto& cell : table.limits) {
        err << fmt::format("limit value at c={} d={}: {}\n", cell.c, cell.d, cell.reason);
    }
    out << fmt::format("{} {} sweep: {} cells, {} omitted\n", to_string(model), to_string(risk),
                       rows, table.omitted.size());
    return kOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const Flags& f, std::ostream& out) {
    VerifyOptions options;
    options.samples = f.samples;
    options.seed = f.verify_seed;
    options.mc_n = f.verify_mc_n;
    options.lo = f.lo;
    options.hi = f.hi;
    options.threads = f.threads;
    const VerifyReport report = run_verify(options);
    out << render_report(report);
    return report.passed() ? kOk : kCheckFailed;
}

// ---- benchmark ------------------------------------------------------------

struct BenchmarkRow {
    ModelKind model;
    std::array<double, 6> expected;  // MAP, ABS, MSE, then P{theta <= .} at each
};

constexpr std::array kBenchmark{
    BenchmarkRow{ModelKind::OriginalNBS, {0.200, 0.350, 0.350, 0.125, 0.500, 0.500}},
    BenchmarkRow{ModelKind::Case1, {0.200, 0.275, 0.300, 0.308, 0.495, 0.547}},
    BenchmarkRow{ModelKind::Case2, {0.200, 0.200, 0.255, 0.500, 0.500, 0.635}},
};
constexpr std::array<RiskProfile, 3> kBenchmarkRisks{RiskProfile::MAP, RiskProfile::ABS,
                                                     RiskProfile::MSE};
constexpr double kBenchmarkTolerance = 0.0005;

int cmd_benchmark(std::ostream& out) {
    const PayoffBounds bounds = validate_bounds(0.0, 0.2, 0.0, 0.8);
    out << "benchmark grid at a=0.00 b=0.20 c=0.00 d=0.80\n";
    out << fmt::format("{:<6} {:<20} {:>8} {:>9}  {}\n", "model", "quantity", "computed",
                       "reference", "status");
    std::size_t matched = 0;
    std::size_t total = 0;
    for (const BenchmarkRow& row : kBenchmark) {
        std::array<double, 6> computed{};
        for (std::size_t r = 0; r < kBenchmarkRisks.size(); ++r) {
            const double theta = estimate(row.model, kBenchmarkRisks[r], bounds).theta1;
            computed[r] = theta;
            computed[r + 3] = cdf_at(row.model, bounds, theta);
        }
        for (std::size_t k = 0; k < computed.size(); ++k) {
            const std::string_view risk = to_string(kBenchmarkRisks[k % 3]);
            const std::string quantity = k < 3 ? fmt::format("theta_{}", risk)
                                               : fmt::format("P{{theta<=theta_{}}}", risk);
            const double rounded = std::round(computed[k] * 1000.0) / 1000.0;
            const bool ok = std::abs(rounded - row.expected[k]) <= kBenchmarkTolerance;
            matched += ok ? 1 : 0;
            ++total;
            out << fmt::format("{:<6} {:<20} {:>8.3f} {:>9.3f}  {}\n", to_string(row.model),
                               quantity, computed[k], row.expected[k], ok ? "ok" : "FAIL");
        }
    }
    out << fmt::format("{}/{} cells match\n", matched, total);
    return matched == total ? kOk : kCheckFailed;
}

// ---- simulate -------------------------------------------------------------

constexpr std::array kSummaryQuantiles{0.025, 0.25, 0.5, 0.75, 0.975};

int cmd_simulate(const Flags& f, std::ostream& out, std::ostream& err) {
    const ScenarioConfig cfg = resolve(gather(f));
    const std::vector<double> samples =
        sample_thetas(cfg.surface(), cfg.bounds, cfg.mc_n, cfg.seed, f.threads);
    const SampleSummary summary =
        summarize(samples, kSummaryQuantiles, kDefaultBinCount, cfg.seed);
    if (f.out) {
        write_file(*f.out, [&](std::ostream& os) { write_samples_csv(os, samples); });
        err << fmt::format("wrote {} samples to {}\n", samples.size(), *f.out);
    }
    if (f.json) {
        out << json_text(to_json(summary));
        return kOk;
    }
    out << fmt::format("n               {}\n", summary.n);
    out << fmt::format("seed            {}\n", summary.seed);
    out << fmt::format("mean            {}\n", fixed3(summary.mean));
    out << fmt::format("std error       {:.3e}\n", summary.std_error_of_mean);
    for (const auto& [p, q] : summary.quantiles) {
        out << fmt::format("quantile {:<6} {}\n", p, fixed3(q));
    }
    out << fmt::format("histogram mode  {}\n", fixed3(summary.histogram_mode));
    return kOk;
}

}  // namespace

void ScenarioInput::overlay(const ScenarioInput& flags) {
    take(a, flags.a);
    take(b, flags.b);
    take(c, flags.c);
    take(d, flags.d);
    take(model, flags.model);
    take(risk, flags.risk);
    take(operating_revenue, flags.operating_revenue);
    take(operating_cost, flags.operating_cost);
    take(p11, flags.p11);
    take(p12, flags.p12);
    take(p21, flags.p21);
    take(p22, flags.p22);
    take(mc_n, flags.mc_n);
    take(seed, flags.seed);
    take(grid_points, flags.grid_points);
}

ScenarioInput parse_config(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(fmt::format("config: {}", e.what()));
    }
    if (!root.is_object()) throw UsageError("config: top level must be a JSON object");
    reject_unknown_keys(root, "",
                        {"bounds", "model", "risk", "financials", "perceptions", "mc_n", "seed",
                         "grid_points"});

    ScenarioInput input;
    if (root.contains("bounds")) {
        const Json& bounds = require_object(root["bounds"], "bounds");
        reject_unknown_keys(bounds, "bounds", {"a", "b", "c", "d"});
        for (auto [key, target] : {std::pair{"a", &input.a}, std::pair{"b", &input.b},
                                   std::pair{"c", &input.c}, std::pair{"d", &input.d}}) {
            if (bounds.contains(key)) *target = number_field(bounds[key], fmt::format("bounds.{}", key));
        }
    }
    if (root.contains("model")) input.model = string_field(root["model"], "model");
    if (root.contains("risk")) input.risk = string_field(root["risk"], "risk");
    if (root.contains("financials")) {
        const Json& fin = require_object(root["financials"], "financials");
        reject_unknown_keys(fin, "financials", {"operating_revenue", "operating_cost"});
        if (fin.contains("operating_revenue")) {
            input.operating_revenue =
                number_field(fin["operating_revenue"], "financials.operating_revenue");
        }
        if (fin.contains("operating_cost")) {
            input.operating_cost = number_field(fin["operating_cost"], "financials.operating_cost");
        }
    }
    if (root.contains("perceptions")) {
        const Json& p = require_object(root["perceptions"], "perceptions");
        reject_unknown_keys(p, "perceptions", {"p11", "p12", "p21", "p22"});
        for (auto [key, target] : {std::pair{"p11", &input.p11}, std::pair{"p12", &input.p12},
                                   std::pair{"p21", &input.p21}, std::pair{"p22", &input.p22}}) {
            if (p.contains(key)) *target = number_field(p[key], fmt::format("perceptions.{}", key));
        }
    }
    if (root.contains("mc_n")) input.mc_n = count_field(root["mc_n"], "mc_n");
    if (root.contains("seed")) input.seed = count_field(root["seed"], "seed");
    if (root.contains("grid_points")) input.grid_points = count_field(root["grid_points"], "grid_points");
    return input;
}

ScenarioInput load_config(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return parse_config(text);
    } catch (const UsageError& e) {
        throw UsageError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

ModelKind resolve_model(const std::optional<std::string>& text) {
    if (!text) return ModelKind::Case1;
    const auto model = parse_model_kind(*text);
    if (!model) throw UsageError(fmt::format("model '{}' must be one of NBS, Case1, Case2", *text));
    return *model;
}

RiskProfile resolve_risk(const std::optional<std::string>& text) {
    if (!text) return RiskProfile::ABS;
    const auto risk = parse_risk_profile(*text);
    if (!risk) throw UsageError(fmt::format("risk '{}' must be one of ABS, MAP, MSE", *text));
    return *risk;
}

RoyaltySurface ScenarioConfig::surface() const {
    if (perceptions) return RoyaltySurface::fixed_weight(alpha_from_perceptions(*perceptions));
    return model;
}

ScenarioConfig resolve(const ScenarioInput& input) {
    std::vector<std::string> missing;
    for (auto [name, value] : {std::pair{"a", &input.a}, std::pair{"b", &input.b},
                               std::pair{"c", &input.c}, std::pair{"d", &input.d}}) {
        if (!*value) missing.emplace_back(name);
    }
    if (!missing.empty()) {
        throw UsageError(fmt::format("missing bound(s) {}; set them with --a --b --c --d or the "
                                     "config 'bounds' object",
                                     fmt::join(missing, ", ")));
    }
    ScenarioConfig cfg(validate_bounds(*input.a, *input.b, *input.c, *input.d));

    cfg.model = resolve_model(input.model);
    cfg.risk = resolve_risk(input.risk);

    if (input.operating_revenue.has_value() != input.operating_cost.has_value()) {
        throw UsageError("financials need both operating revenue (--or) and operating cost (--oc)");
    }
    if (input.operating_revenue) {
        cfg.financials = FinancialStatement::make(*input.operating_revenue, *input.operating_cost);
    }

    if (input.p11 || input.p12 || input.p21 || input.p22) {
        if (input.model && cfg.model != ModelKind::OriginalNBS) {
            throw UsageError(fmt::format(
                "perceptions set the bargaining weight directly and require model NBS, got {}",
                to_string(cfg.model)));
        }
        PerceptionMatrix p;
        p.p11 = input.p11.value_or(p.p11);
        p.p12 = input.p12.value_or(p.p12);
        p.p21 = input.p21.value_or(p.p21);
        p.p22 = input.p22.value_or(p.p22);
        p.validate();
        cfg.model = ModelKind::OriginalNBS;
        cfg.perceptions = p;
    }

    if (input.mc_n) {
        if (*input.mc_n == 0) throw UsageError("mc_n must be at least 1");
        cfg.mc_n = *input.mc_n;
    }
    if (input.seed) cfg.seed = *input.seed;
    if (input.grid_points) {
        if (*input.grid_points < 3) throw UsageError("grid_points must be at least 3");
        cfg.grid_points = *input.grid_points;
    }
    return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reasonable-royalty estimates under uncertain outside options", "royalty"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* estimate_cmd = app.add_subcommand("estimate", "point estimate for one scenario");
    add_scenario_options(estimate_cmd, f);

    CLI::App* posterior_cmd =
        app.add_subcommand("posterior", "density and CDF curve with numeric estimators");
    add_scenario_options(posterior_cmd, f);
    posterior_cmd->add_option("--out", f.out, "CSV path for theta,pdf,cdf")->required();

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "family of solutions over c and d");
    add_model_options(sweep_cmd, f);
    sweep_cmd->add_option("--c", f.scenario.c, "not accepted; use --c-values");
    sweep_cmd->add_option("--d", f.scenario.d, "not accepted; use --d-grid");
    sweep_cmd->add_option("--c-values", f.c_values, "lower bounds c (default 0,0.1,...,0.7)")
        ->delimiter(',');
    sweep_cmd->add_option("--d-grid", f.d_grid, "upper bounds d (default 0,0.01,...,1-b)")
        ->delimiter(',');
    sweep_cmd->add_option("--engine", f.engine, "closed_form or numeric")->capture_default_str();
    sweep_cmd->add_option("--format", f.format, "csv or json")->capture_default_str();
    sweep_cmd->add_option("--out", f.out, "output path")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "closed forms vs quadrature vs Monte Carlo");
    verify_cmd->add_option("--samples", f.samples, "random bounds tuples")->capture_default_str();
    verify_cmd->add_option("--seed", f.verify_seed, "tuple and Monte Carlo seed")
        ->capture_default_str();
    verify_cmd->add_option("--mc-n", f.verify_mc_n, "Monte Carlo draws per tuple and model")
        ->capture_default_str();
    verify_cmd->add_option("--lo", f.lo, "smallest bound drawn")->capture_default_str();
    verify_cmd->add_option("--hi", f.hi, "largest bound drawn")->capture_default_str();
    verify_cmd->add_option("--threads", f.threads, "worker threads, 0 = all cores")
        ->capture_default_str();

    CLI::App* benchmark_cmd = app.add_subcommand(
        "benchmark", "reference grid at a = 0, b = 0.2, c = 0, d = 0.8 to three decimals");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo summary");
    add_scenario_options(simulate_cmd, f);
    simulate_cmd->add_option("--out", f.out, "CSV path for the raw samples");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*estimate_cmd) return cmd_estimate(f, out);
        if (*posterior_cmd) return cmd_posterior(f, out, err);
        if (*sweep_cmd) return cmd_sweep(f, out, err);
        if (*verify_cmd) return cmd_verify(f, out);
        if (*benchmark_cmd) return cmd_benchmark(out);
        if (*simulate_cmd) return cmd_simulate(f, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const RoyaltyError& e) {
        err << "error: " << e.what() << '\n';
        return is_validation_error(e.kind()) ? kInvalidInput : kDegenerate;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInvalidInput;
}

}  // namespace royalty::cli
