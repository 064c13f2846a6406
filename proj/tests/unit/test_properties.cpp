#include "royalty/estimators.hpp"
#include "royalty/posterior.hpp"
#include "royalty/sweep.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace royalty;

namespace {

PayoffBounds to_bounds(const oracle::Rect& r) { return validate_bounds(r.a, r.b, r.c, r.d); }

bool defined(ModelKind m, const oracle::Rect& r) {
    return m != ModelKind::Case2 || r.b + r.d > 0.0;
}

bool defined_both_ways(ModelKind m, const oracle::Rect& r) {
    return defined(m, r) && defined(m, {r.c, r.d, r.a, r.b});
}

double trapezoid(const PosteriorCurve& curve) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < curve.thetas.size(); ++i) {
        sum += 0.5 * (curve.pdf[i] + curve.pdf[i + 1]) * (curve.thetas[i + 1] - curve.thetas[i]);
    }
    return sum;
}

}  // namespace

TEST(Properties, ModelsAreAntisymmetricUnderExchange) {
    std::mt19937_64 gen(51);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double d1 = unit(gen);
        const double d2 = (1.0 - d1) * unit(gen);
        const auto p = NormalizedPayoffs::make(d1, d2);
        for (ModelKind m : kAllModels) {
            EXPECT_NEAR(theta_model(m, p.swapped()), 1.0 - theta_model(m, p), 1e-15);
        }
    }
}

TEST(Properties, IndividualRationality) {
    std::mt19937_64 gen(52);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double d1 = unit(gen);
        const double d2 = (1.0 - d1) * unit(gen);
        const auto p = NormalizedPayoffs::make(d1, d2);
        for (ModelKind m : kAllModels) {
            const double theta = theta_model(m, p);
            EXPECT_GE(theta, d1 - 1e-15) << to_string(m);
            EXPECT_LE(theta, 1.0 - d2 + 1e-15) << to_string(m);
        }
        const double theta = theta_general(p, unit(gen));
        EXPECT_GE(theta, d1 - 1e-15);
        EXPECT_LE(theta, 1.0 - d2 + 1e-15);
    }
}

TEST(Properties, ClosedFormEstimatorsAreAntisymmetric) {
    for (const auto& r : oracle::random_rects(1000, 53)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined_both_ways(m, r)) continue;
            for (RiskProfile k : kAllRisks) {
                EXPECT_NEAR(estimate(m, k, b.swapped()).theta1, 1.0 - estimate(m, k, b).theta1,
                            1e-12)
                    << to_string(m) << " " << to_string(k) << " " << r.a << " " << r.b << " "
                    << r.c << " " << r.d;
            }
        }
    }
}

TEST(Properties, NumericMedianAndMeanAreAntisymmetric) {
    for (const auto& r : oracle::random_rects(1000, 54)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined_both_ways(m, r)) continue;
            EXPECT_NEAR(numeric_median(m, b.swapped()), 1.0 - numeric_median(m, b), 1e-8)
                << to_string(m);
            EXPECT_NEAR(numeric_mean(m, b.swapped()), 1.0 - numeric_mean(m, b), 1e-8)
                << to_string(m);
        }
    }
}

TEST(Properties, NumericModeIsAntisymmetric) {
    for (const auto& r : oracle::random_rects(60, 55)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined_both_ways(m, r)) continue;
            EXPECT_NEAR(numeric_mode(m, b.swapped()).theta, 1.0 - numeric_mode(m, b).theta, 1e-8)
                << to_string(m) << " " << r.a << " " << r.b << " " << r.c << " " << r.d;
        }
    }
}

TEST(Properties, CdfReflectsUnderExchange) {
    for (const auto& r : oracle::random_rects(100, 56)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined_both_ways(m, r) || theta_support(m, b).deterministic()) continue;
            for (double t : {0.17, 0.33, 0.5, 0.71, 0.89}) {
                EXPECT_NEAR(cdf_at(m, b.swapped(), 1.0 - t), 1.0 - cdf_at(m, b, t), 1e-9)
                    << to_string(m) << " t=" << t;
            }
        }
    }
}

TEST(Properties, IdenticalBoundsCollapseNumerically) {
    for (const auto& r : oracle::random_rects(40, 57, 0.01, 0.0, false)) {
        if (r.b > 0.5) continue;
        const PayoffBounds b = validate_bounds(r.a, r.b, r.a, r.b);
        for (ModelKind m : kAllModels) {
            EXPECT_NEAR(numeric_median(m, b), 0.5, 1e-9) << to_string(m);
            EXPECT_NEAR(numeric_mean(m, b), 0.5, 1e-9) << to_string(m);
            EXPECT_NEAR(numeric_mode(m, b).theta, 0.5, 1e-9) << to_string(m);
        }
    }
}

TEST(Properties, EstimatorsAreMonotoneInBounds) {
    std::mt19937_64 gen(58);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& r : oracle::random_rects(500, 59, 0.0, 0.0, false)) {
        const PayoffBounds base = to_bounds(r);
        const double up_a = r.a + (r.b - r.a) * unit(gen);
        const double up_b = r.b + (1.0 - r.b - r.d) * unit(gen);
        const double up_c = r.c + (r.d - r.c) * unit(gen);
        const double up_d = r.d + (1.0 - r.b - r.d) * unit(gen);
        for (ModelKind m : kAllModels) {
            for (RiskProfile k : kAllRisks) {
                const double v = estimate(m, k, base).theta1;
                EXPECT_GE(estimate(m, k, validate_bounds(up_a, r.b, r.c, r.d)).theta1, v - 1e-12);
                EXPECT_GE(estimate(m, k, validate_bounds(r.a, up_b, r.c, r.d)).theta1, v - 1e-12);
                EXPECT_LE(estimate(m, k, validate_bounds(r.a, r.b, up_c, r.d)).theta1, v + 1e-12);
                EXPECT_LE(estimate(m, k, validate_bounds(r.a, r.b, r.c, up_d)).theta1, v + 1e-12);
            }
        }
    }
}

TEST(Properties, CdfBracketsEveryEstimate) {
    const double delta = 1e-6;
    for (const auto& r : oracle::random_rects(100, 60)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined(m, r)) continue;
            for (RiskProfile k : kAllRisks) {
                const double est = estimate(m, k, b).theta1;
                const double at = cdf_at(m, b, est);
                EXPECT_LE(cdf_at(m, b, est - delta), at);
                EXPECT_LE(at, cdf_at(m, b, est + delta));
            }
        }
    }
}

TEST(Properties, MedianHalvesTheCdf) {
    for (const auto& r : oracle::random_rects(150, 61)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined(m, r) || theta_support(m, b).deterministic()) continue;
            EXPECT_NEAR(cdf_at(m, b, numeric_median(m, b)), 0.5, 1e-9) << to_string(m);
        }
    }
}

TEST(Properties, PdfNormalizesWhereTheGridResolvesIt) {
    // Widths of at least 0.2 and lower bounds of at least 0.05 keep every
    // edge ramp of the density many grid steps wide.
    for (const auto& r : oracle::random_rects(40, 62, 0.2, 0.05, false)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            EXPECT_NEAR(trapezoid(pdf_curve(m, b)), 1.0, 1e-4)
                << to_string(m) << " " << r.a << " " << r.b << " " << r.c << " " << r.d;
        }
    }
}

TEST(Properties, MeanMinimizesExpectedSquaredError) {
    for (const auto& r : oracle::random_rects(50, 63)) {
        const PayoffBounds b = to_bounds(r);
        for (ModelKind m : kAllModels) {
            if (!defined(m, r)) continue;
            const double mean = numeric_mean(m, b);
            const double best = expected_squared_error(m, b, mean);
            for (double other : {numeric_median(m, b), numeric_mode(m, b, 501).theta,
                                 mean - 0.01, mean + 0.01}) {
                const double cost = expected_squared_error(m, b, other);
                EXPECT_LE(best, cost + 1e-12) << to_string(m);
                // E(theta - x)^2 = Var + (x - mean)^2
                EXPECT_NEAR(cost - best, (other - mean) * (other - mean), 1e-9) << to_string(m);
            }
        }
    }
}

TEST(Properties, SweepCellsMatchDirectEstimates) {
    const auto ds = default_d_grid(0.25);
    const auto cs = default_c_values();
    for (ModelKind m : kAllModels) {
        for (RiskProfile k : kAllRisks) {
            const auto table = family_sweep(m, k, 0.05, 0.25, cs, ds);
            for (const auto& s : table.series) {
                for (const auto& row : s.rows) {
                    EXPECT_EQ(row.theta_hat,
                              estimate(m, k, validate_bounds(0.05, 0.25, s.c, row.d)).theta1);
                }
            }
        }
    }
}
