#include "royalty/verify.hpp"

#include "royalty/detail/parallel.hpp"
#include "royalty/error.hpp"
#include "royalty/monte_carlo.hpp"
#include "royalty/posterior.hpp"
#include "royalty/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <utility>

#include <fmt/format.h>

namespace royalty {

namespace {

constexpr std::size_t kPatternCount = 6;
constexpr std::size_t kMaxRejections = 1'000'000;
constexpr std::size_t kModelCount = std::size(kAllModels);
constexpr std::size_t kRiskCount = std::size(kAllRisks);
constexpr std::size_t kMseIndex = 2;
static_assert(kAllRisks[kMseIndex] == RiskProfile::MSE);

struct ModelOutcome {
    bool degenerate = false;
    std::array<double, kRiskCount> closed{};  // indexed like kAllRisks
    std::array<double, kRiskCount> numeric{};
    double mc_mean = 0.0;
    double mc_se = 0.0;
};

ModelOutcome evaluate(ModelKind model, const PayoffBounds& bounds, std::size_t mc_n,
                      std::uint64_t seed) {
    ModelOutcome out;
    try {
        for (std::size_t r = 0; r < kRiskCount; ++r) {
            out.closed[r] = estimate(model, kAllRisks[r], bounds).theta1;
            out.numeric[r] = numeric_estimate(model, kAllRisks[r], bounds);
        }
        const std::vector<double> draws = sample_thetas(model, bounds, mc_n, seed);
        const double n = static_cast<double>(draws.size());
        double sum = 0.0;
        for (double x : draws) sum += x;
        out.mc_mean = sum / n;
        double ss = 0.0;
        for (double x : draws) ss += (x - out.mc_mean) * (x - out.mc_mean);
        out.mc_se = std::sqrt(ss / (n - 1.0) / n);
    } catch (const RoyaltyError& e) {
        if (e.kind() != ErrorKind::DegeneratePayoffs) throw;
        out.degenerate = true;
    }
    return out;
}

std::string_view comparison_label(ModelKind model, RiskProfile risk) {
    if (risk == RiskProfile::MAP) return "grid mode";
    return closed_form_is_exact(model, risk) ? "exact" : "approximation";
}

std::string describe(const PayoffBounds& b) {
    return fmt::format("a={:.6f} b={:.6f} c={:.6f} d={:.6f}", b.a(), b.b(), b.c(), b.d());
}

}  // namespace

std::vector<PayoffBounds> sample_bounds(std::size_t n, std::uint64_t seed, double lo, double hi) {
    if (!(lo >= 0.0 && lo <= 0.5 && hi > lo && hi <= 1.0)) {
        throw RoyaltyError(ErrorKind::InvalidArgument,
                           fmt::format("bounds region [{}, {}] must satisfy "
                                       "0 <= lo <= 0.5 and lo < hi <= 1",
                                       lo, hi));
    }
    Xoshiro256StarStar rng(seed);
    auto draw = [&] { return lo + (hi - lo) * rng.uniform(); };

    std::vector<PayoffBounds> tuples;
    tuples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t attempt = 0;; ++attempt) {
            if (attempt == kMaxRejections) {
                throw RoyaltyError(ErrorKind::InvalidArgument,
                                   fmt::format("no valid bounds found in [{}, {}]", lo, hi));
            }
            double a = draw();
            double b = draw();
            double c = draw();
            double d = draw();
            if (a > b) std::swap(a, b);
            if (c > d) std::swap(c, d);
            switch (i % kPatternCount) {
                case 1: a = lo; break;
                case 2: a = lo; c = lo; break;
                case 3: b = a; break;
                case 4: d = c; break;
                case 5: a = lo; b = lo; break;
                default: break;
            }
            if (b + d <= 1.0) {
                tuples.push_back(validate_bounds(a, b, c, d));
                break;
            }
        }
    }
    return tuples;
}

bool closed_form_is_exact(ModelKind model, RiskProfile risk) noexcept {
    if (risk == RiskProfile::MAP) return false;
    return !(model == ModelKind::Case1 && risk == RiskProfile::ABS);
}

double VerifyReport::max_exact_discrepancy() const noexcept {
    double worst = 0.0;
    for (const auto& stat : discrepancies) {
        if (stat.exact) worst = std::max(worst, stat.max_abs);
    }
    return worst;
}

double VerifyReport::case1_abs_max_relative() const noexcept {
    for (const auto& stat : discrepancies) {
        if (stat.model == ModelKind::Case1 && stat.risk == RiskProfile::ABS) return stat.max_rel;
    }
    return 0.0;
}

bool VerifyReport::passed() const noexcept {
    return max_exact_discrepancy() <= kExactTolerance &&
           case1_abs_max_relative() <= kApproximationTolerance;
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.samples == 0) {
        throw RoyaltyError(ErrorKind::InvalidArgument, "samples must be at least 1");
    }
    if (options.mc_n < 2) {
        throw RoyaltyError(ErrorKind::InvalidArgument, "mc_n must be at least 2");
    }
    const std::vector<PayoffBounds> tuples =
        sample_bounds(options.samples, options.seed, options.lo, options.hi);

    // One Monte Carlo seed per (tuple, model), fixed before any parallel work.
    SplitMix64 seeder(options.seed ^ 0x6d6f6e746563726cULL);
    std::vector<std::uint64_t> seeds(tuples.size() * kModelCount);
    for (auto& s : seeds) s = seeder.next();

    std::vector<std::array<ModelOutcome, kModelCount>> outcomes(tuples.size());
    detail::parallel_for(tuples.size(), options.threads, [&](std::size_t i) {
        for (std::size_t m = 0; m < kModelCount; ++m) {
            outcomes[i][m] = evaluate(kAllModels[m], tuples[i], options.mc_n,
                                      seeds[i * kModelCount + m]);
        }
    });

    VerifyReport report;
    report.options = options;
    for (std::size_t m = 0; m < kModelCount; ++m) {
        const ModelKind model = kAllModels[m];
        MonteCarloStat mc{model};
        std::array<DiscrepancyStat, kRiskCount> stats;
        for (std::size_t r = 0; r < kRiskCount; ++r) {
            stats[r] = {model, kAllRisks[r], closed_form_is_exact(model, kAllRisks[r]), 0, 0.0,
                        0.0, std::nullopt};
        }
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            const ModelOutcome& out = outcomes[i][m];
            if (out.degenerate) {
                ++report.degenerate_skipped;
                continue;
            }
            for (std::size_t r = 0; r < kRiskCount; ++r) {
                DiscrepancyStat& stat = stats[r];
                const double diff = std::abs(out.closed[r] - out.numeric[r]);
                const double rel = out.numeric[r] > 0.0 ? diff / out.numeric[r] : diff;
                ++stat.evaluated;
                const bool worse = stat.exact ? diff > stat.max_abs : rel > stat.max_rel;
                if (worse || !stat.worst) stat.worst = tuples[i];
                stat.max_abs = std::max(stat.max_abs, diff);
                stat.max_rel = std::max(stat.max_rel, rel);
            }
            const double gap = std::abs(out.mc_mean - out.numeric[kMseIndex]);
            const double z = out.mc_se > 0.0 ? gap / out.mc_se : (gap <= 1e-12 ? 0.0 : HUGE_VAL);
            ++mc.evaluated;
            if (z <= 4.0) ++mc.within_4se;
            mc.max_z = std::max(mc.max_z, z);
        }
        report.discrepancies.insert(report.discrepancies.end(), stats.begin(), stats.end());
        report.monte_carlo.push_back(mc);
    }
    return report;
}

std::string render_report(const VerifyReport& report) {
    const VerifyOptions& o = report.options;
    std::string text = fmt::format("verify samples={} seed={} mc_n={} region=[{}, {}]\n",
                                   o.samples, o.seed, o.mc_n, o.lo, o.hi);
    text += "closed form vs quadrature\n";
    text += fmt::format("  {:<6} {:<4} {:<13} {:>5} {:>10} {:>10}\n", "model", "risk", "kind",
                        "n", "max_abs", "max_rel");
    for (const auto& s : report.discrepancies) {
        text += fmt::format("  {:<6} {:<4} {:<13} {:>5} {:>10.3e} {:>10.3e}\n",
                            to_string(s.model), to_string(s.risk),
                            comparison_label(s.model, s.risk), s.evaluated, s.max_abs,
                            s.max_rel);
    }
    text += "monte carlo mean vs quadrature mean\n";
    for (const auto& m : report.monte_carlo) {
        text += fmt::format("  {:<6} within 4 SE: {}/{}  max z: {:.3f}\n", to_string(m.model),
                            m.within_4se, m.evaluated, m.max_z);
    }
    if (report.degenerate_skipped > 0) {
        text += fmt::format("degenerate evaluations skipped: {}\n", report.degenerate_skipped);
    }

    const double exact = report.max_exact_discrepancy();
    const double rel = report.case1_abs_max_relative();
    text += fmt::format("max exact-form discrepancy: {:.3e} (limit {:.0e}) {}\n", exact,
                        VerifyReport::kExactTolerance,
                        exact <= VerifyReport::kExactTolerance ? "PASS" : "FAIL");
    text += fmt::format("Case1 ABS max relative error: {:.4f} (limit {:.2f}) {}\n", rel,
                        VerifyReport::kApproximationTolerance,
                        rel <= VerifyReport::kApproximationTolerance ? "PASS" : "FAIL");
    for (const auto& s : report.discrepancies) {
        if (s.model == ModelKind::Case1 && s.risk == RiskProfile::ABS && s.worst) {
            text += fmt::format("  worst tuple: {}\n", describe(*s.worst));
        }
    }
    text += fmt::format("result: {}\n", report.passed() ? "PASS" : "FAIL");
    return text;
}

}  // namespace royalty
