#include "royalty/bargain.hpp"
#include "royalty/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace royalty;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const RoyaltyError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no RoyaltyError thrown";
    return ErrorKind::InvalidArgument;
}

NormalizedPayoffs payoffs(double d1, double d2) { return NormalizedPayoffs::make(d1, d2); }

}  // namespace

TEST(ValidateBounds, AcceptsWorkedExample) {
    const PayoffBounds b = validate_bounds(0.0, 0.2, 0.0, 0.8);
    EXPECT_EQ(b.a(), 0.0);
    EXPECT_EQ(b.b(), 0.2);
    EXPECT_EQ(b.c(), 0.0);
    EXPECT_EQ(b.d(), 0.8);
    EXPECT_DOUBLE_EQ(b.width1(), 0.2);
    EXPECT_DOUBLE_EQ(b.width2(), 0.8);
}

TEST(ValidateBounds, AcceptsFullyDegenerate) {
    EXPECT_NO_THROW(validate_bounds(0.0, 0.0, 0.0, 0.0));
    EXPECT_NO_THROW(validate_bounds(0.3, 0.3, 0.7, 0.7));
}

TEST(ValidateBounds, RejectsDisordered) {
    EXPECT_EQ(kind_of([] { validate_bounds(0.3, 0.2, 0.0, 0.5); }), ErrorKind::Disordered);
    EXPECT_EQ(kind_of([] { validate_bounds(0.0, 0.2, 0.5, 0.4); }), ErrorKind::Disordered);
}

TEST(ValidateBounds, RejectsSurplusViolationNamingConstraint) {
    try {
        validate_bounds(0.0, 0.6, 0.0, 0.6);
        FAIL() << "expected SurplusViolation";
    } catch (const RoyaltyError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SurplusViolation);
        EXPECT_NE(std::string(e.what()).find("b + d <= 1"), std::string::npos) << e.what();
    }
}

TEST(ValidateBounds, RejectsOutOfRangeAndNonFinite) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_EQ(kind_of([] { validate_bounds(-0.1, 0.2, 0.0, 0.5); }), ErrorKind::OutOfRange);
    EXPECT_EQ(kind_of([] { validate_bounds(0.0, 1.2, 0.0, 0.0); }), ErrorKind::OutOfRange);
    EXPECT_EQ(kind_of([&] { validate_bounds(nan, 0.2, 0.0, 0.5); }), ErrorKind::OutOfRange);
    EXPECT_EQ(kind_of([] { validate_bounds(0.0, 0.2, 0.0, INFINITY); }), ErrorKind::OutOfRange);
}

TEST(ValidateBounds, ToleratesDecimalRoundingAtTheSumLimit) {
    EXPECT_NO_THROW(validate_bounds(0.1, 0.35, 0.2, 0.65));
    EXPECT_NO_THROW(validate_bounds(0.0, 0.7, 0.0, 0.3));
}

TEST(ValidateBounds, SwappedExchangesRoles) {
    const PayoffBounds b = validate_bounds(0.1, 0.2, 0.3, 0.4);
    EXPECT_EQ(b.swapped(), validate_bounds(0.3, 0.4, 0.1, 0.2));
    EXPECT_EQ(b.swapped().swapped(), b);
}

TEST(Alpha, FromPerceptions) {
    EXPECT_DOUBLE_EQ(alpha_from_perceptions({0.5, 0.5, 0.5, 0.5}), 0.5);
    EXPECT_DOUBLE_EQ(alpha_from_perceptions({1.0, 1.0, 0.0, 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(alpha_from_perceptions({0.0, 0.0, 1.0, 1.0}), 0.0);
    EXPECT_NEAR(alpha_from_perceptions({0.3, 0.3, 0.1, 0.1}), 0.6, 1e-15);
    EXPECT_EQ(kind_of([] { alpha_from_perceptions({1.5, 0.5, 0.5, 0.5}); }),
              ErrorKind::OutOfRange);
}

TEST(Alpha, Case1) {
    EXPECT_DOUBLE_EQ(alpha_case1(payoffs(0.25, 0.25)), 0.5);
    EXPECT_NEAR(alpha_case1(payoffs(0.3, 0.1)), 0.6, 1e-15);
    EXPECT_DOUBLE_EQ(alpha_case1(payoffs(0.0, 1.0)), 0.0);
}

TEST(Alpha, Case2) {
    EXPECT_DOUBLE_EQ(alpha_case2(payoffs(0.2, 0.2)), 0.5);
    EXPECT_NEAR(alpha_case2(payoffs(0.3, 0.1)), 0.75, 1e-15);
    EXPECT_EQ(kind_of([] { alpha_case2(payoffs(0.0, 0.0)); }), ErrorKind::DegeneratePayoffs);
}

TEST(ThetaGeneral, WeightEndpointsAndMidpoint) {
    EXPECT_NEAR(theta_general(payoffs(0.2, 0.3), 0.5), 0.45, 1e-15);
    EXPECT_DOUBLE_EQ(theta_general(payoffs(0.2, 0.3), 0.0), 0.2);
    EXPECT_NEAR(theta_general(payoffs(0.2, 0.3), 1.0), 0.7, 1e-15);
    EXPECT_EQ(kind_of([] { theta_general(payoffs(0.2, 0.3), 1.1); }), ErrorKind::OutOfRange);
}

TEST(ThetaModel, WorkedExampleCorner) {
    for (ModelKind m : kAllModels) {
        EXPECT_NEAR(theta_model(m, payoffs(0.2, 0.8)), 0.2, 1e-15) << to_string(m);
    }
}

TEST(ThetaModel, EqualPayoffsSplitEvenly) {
    for (ModelKind m : kAllModels) {
        for (double v : {0.0, 0.1, 0.37, 0.5}) {
            if (m == ModelKind::Case2 && v == 0.0) continue;
            EXPECT_NEAR(theta_model(m, payoffs(v, v)), 0.5, 1e-15) << to_string(m) << " " << v;
        }
    }
}

TEST(ThetaModel, Case2OriginIsDegenerate) {
    EXPECT_EQ(kind_of([] { theta_model(ModelKind::Case2, payoffs(0.0, 0.0)); }),
              ErrorKind::DegeneratePayoffs);
    EXPECT_TRUE(std::isnan(theta_raw(ModelKind::Case2, 0.0, 0.0)));
}

TEST(ThetaModel, MatchesWeightForm) {
    // Each model is theta_general with its own weight.
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double d1 = unit(gen);
        const double d2 = (1.0 - d1) * unit(gen);
        const auto p = payoffs(d1, d2);
        EXPECT_NEAR(theta_model(ModelKind::OriginalNBS, p), theta_general(p, 0.5), 1e-15);
        EXPECT_NEAR(theta_model(ModelKind::Case1, p), theta_general(p, alpha_case1(p)), 1e-14);
        EXPECT_NEAR(theta_model(ModelKind::Case2, p), theta_general(p, alpha_case2(p)), 1e-14);
    }
}

TEST(ThetaModel, Case1PolynomialForm) {
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double d1 = unit(gen);
        const double d2 = (1.0 - d1) * unit(gen);
        const double expected = (d2 * d2 - d1 * d1 + 2.0 * (d1 - d2) + 1.0) / 2.0;
        EXPECT_NEAR(theta_model(ModelKind::Case1, payoffs(d1, d2)), expected, 1e-14);
    }
}

TEST(NormalizedPayoffs, Validation) {
    EXPECT_EQ(kind_of([] { payoffs(0.7, 0.4); }), ErrorKind::SurplusViolation);
    EXPECT_EQ(kind_of([] { payoffs(-0.1, 0.4); }), ErrorKind::OutOfRange);
    EXPECT_NO_THROW(payoffs(0.35, 0.65));
}

TEST(OptimalPartition, Examples) {
    const auto p = optimal_partition(100.0, 20.0, 30.0, 0.5);
    EXPECT_DOUBLE_EQ(p.pi1, 45.0);
    EXPECT_DOUBLE_EQ(p.pi2, 55.0);
    const auto q = optimal_partition(100.0, 0.0, 0.0, 0.5);
    EXPECT_DOUBLE_EQ(q.pi1, 50.0);
    EXPECT_DOUBLE_EQ(q.pi2, 50.0);
    const auto r = optimal_partition(100.0, 20.0, 30.0, 1.0);
    EXPECT_DOUBLE_EQ(r.pi1, 70.0);
    EXPECT_DOUBLE_EQ(r.pi2, 30.0);
}

TEST(OptimalPartition, Errors) {
    EXPECT_EQ(kind_of([] { optimal_partition(100.0, 60.0, 50.0, 0.5); }),
              ErrorKind::SurplusViolation);
    EXPECT_EQ(kind_of([] { optimal_partition(0.0, 0.0, 0.0, 0.5); }),
              ErrorKind::InvalidFinancials);
    EXPECT_EQ(kind_of([] { optimal_partition(100.0, -1.0, 0.0, 0.5); }), ErrorKind::OutOfRange);
}

TEST(OptimalPartition, ConservesIncomeAndCoversOutsideOptions) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double oi = 1.0 + 999.0 * unit(gen);
        const double d1 = oi * unit(gen);
        const double d2 = (oi - d1) * unit(gen);
        const double alpha = unit(gen);
        const auto p = optimal_partition(oi, d1, d2, alpha);
        EXPECT_NEAR(p.pi1 + p.pi2, oi, 1e-12 * oi);
        EXPECT_GE(p.pi1, d1 - 1e-12 * oi);
        EXPECT_GE(p.pi2, d2 - 1e-12 * oi);
    }
}

TEST(RoyaltyRate, Examples) {
    EXPECT_NEAR(royalty_rate(0.35, FinancialStatement::make(100.0, 80.0)), 0.07, 1e-15);
    EXPECT_EQ(royalty_rate(0.0, FinancialStatement::make(10.0, 3.0)), 0.0);
    const auto fs = FinancialStatement::make(200.0, 150.0);
    EXPECT_DOUBLE_EQ(royalty_rate(1.0, fs), 0.25);
    EXPECT_DOUBLE_EQ(fs.operating_margin(), 0.25);
    EXPECT_DOUBLE_EQ(fs.operating_income(), 50.0);
}

TEST(RoyaltyRate, InvalidFinancials) {
    EXPECT_EQ(kind_of([] { FinancialStatement::make(80.0, 80.0); }),
              ErrorKind::InvalidFinancials);
    EXPECT_EQ(kind_of([] { FinancialStatement::make(80.0, 100.0); }),
              ErrorKind::InvalidFinancials);
    EXPECT_EQ(kind_of([] { FinancialStatement::make(80.0, -1.0); }),
              ErrorKind::InvalidFinancials);
    EXPECT_EQ(kind_of([] { royalty_rate(1.5, FinancialStatement::make(2.0, 1.0)); }),
              ErrorKind::OutOfRange);
}

TEST(Party2Share, Complement) {
    EXPECT_NEAR(party2_share(0.35), 0.65, 1e-15);
    EXPECT_EQ(party2_share(0.5), 0.5);
    EXPECT_EQ(party2_share(1.0), 0.0);
    EXPECT_EQ(kind_of([] { party2_share(-0.5); }), ErrorKind::OutOfRange);
}

TEST(ModelKindNames, ParseAndPrint) {
    EXPECT_EQ(parse_model_kind("NBS"), ModelKind::OriginalNBS);
    EXPECT_EQ(parse_model_kind("original_nbs"), ModelKind::OriginalNBS);
    EXPECT_EQ(parse_model_kind("case-1"), ModelKind::Case1);
    EXPECT_EQ(parse_model_kind("CASE2"), ModelKind::Case2);
    EXPECT_EQ(parse_model_kind("case3"), std::nullopt);
    for (ModelKind m : kAllModels) EXPECT_EQ(parse_model_kind(to_string(m)), m);
}
