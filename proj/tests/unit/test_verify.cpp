#include "royalty/error.hpp"
#include "royalty/verify.hpp"

#include <gtest/gtest.h>

using namespace royalty;

TEST(SampleBounds, ValidAndInsideRegion) {
    const auto tuples = sample_bounds(120, 3, 0.1, 0.6);
    ASSERT_EQ(tuples.size(), 120u);
    for (const auto& b : tuples) {
        for (double v : {b.a(), b.b(), b.c(), b.d()}) {
            EXPECT_GE(v, 0.1);
            EXPECT_LE(v, 0.6);
        }
        EXPECT_LE(b.b() + b.d(), 1.0);
    }
}

TEST(SampleBounds, CyclesThroughBoundaryPatterns) {
    const auto t = sample_bounds(12, 8);
    EXPECT_EQ(t[1].a(), 0.0);
    EXPECT_EQ(t[2].a(), 0.0);
    EXPECT_EQ(t[2].c(), 0.0);
    EXPECT_EQ(t[3].width1(), 0.0);
    EXPECT_EQ(t[4].width2(), 0.0);
    EXPECT_EQ(t[5].a(), 0.0);
    EXPECT_EQ(t[5].b(), 0.0);
}

TEST(SampleBounds, SeedDeterminesSequence) {
    EXPECT_EQ(sample_bounds(30, 4), sample_bounds(30, 4));
    EXPECT_NE(sample_bounds(30, 4), sample_bounds(30, 5));
}

TEST(SampleBounds, RejectsBadRegion) {
    EXPECT_THROW(sample_bounds(5, 1, 0.6, 0.9), RoyaltyError);
    EXPECT_THROW(sample_bounds(5, 1, 0.3, 0.3), RoyaltyError);
    EXPECT_THROW(sample_bounds(5, 1, -0.1, 0.5), RoyaltyError);
}

TEST(ClosedFormIsExact, OnlyCase1MedianAndModesAreNot) {
    for (ModelKind m : kAllModels) {
        EXPECT_FALSE(closed_form_is_exact(m, RiskProfile::MAP));
        EXPECT_TRUE(closed_form_is_exact(m, RiskProfile::MSE));
    }
    EXPECT_TRUE(closed_form_is_exact(ModelKind::OriginalNBS, RiskProfile::ABS));
    EXPECT_TRUE(closed_form_is_exact(ModelKind::Case2, RiskProfile::ABS));
    EXPECT_FALSE(closed_form_is_exact(ModelKind::Case1, RiskProfile::ABS));
}

TEST(RunVerify, SmallRunPassesAndIsThreadIndependent) {
    VerifyOptions options;
    options.samples = 18;
    options.mc_n = 20'000;
    options.seed = 11;
    const VerifyReport one = run_verify(options);
    options.threads = 3;
    const VerifyReport three = run_verify(options);
    EXPECT_EQ(render_report(one), render_report(three));
    EXPECT_TRUE(one.passed()) << render_report(one);
    EXPECT_LE(one.max_exact_discrepancy(), 1e-9);
    ASSERT_EQ(one.discrepancies.size(), 9u);
    ASSERT_EQ(one.monte_carlo.size(), 3u);
    const std::string text = render_report(one);
    EXPECT_NE(text.find("result: PASS"), std::string::npos);
    EXPECT_NE(text.find("seed=11"), std::string::npos);
}

TEST(RunVerify, Errors) {
    VerifyOptions options;
    options.samples = 0;
    EXPECT_THROW(run_verify(options), RoyaltyError);
    options.samples = 1;
    options.mc_n = 1;
    EXPECT_THROW(run_verify(options), RoyaltyError);
}
