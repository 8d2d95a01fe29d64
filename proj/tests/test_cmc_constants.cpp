#include "expanded_forms.hpp"
#include "rational_oracle.hpp"
#include "test_fixtures.hpp"

#include "ssy/cmc_constants.hpp"
#include "ssy/detail/formulas.hpp"
#include "ssy/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

using namespace ssy;
using fixtures::rel_diff;
using fixtures::ulp_distance;

TEST(CmcConstants, ExactRationalValues)
{
    using rational::frac;
    using rational::Q;
    const Q half = frac(1, 2);
    const Q A = rational::gap(3, half);
    EXPECT_EQ(A, frac(5, 12));
    EXPECT_EQ(detail::delta(A, half), frac(5, 108));
    EXPECT_EQ(detail::delta(A, half) * 4 * (1 + half) * (1 + half), A);

    const Q A0 = rational::gap(3, Q(0));
    EXPECT_EQ(detail::delta(A0, Q(0)), frac(1, 6));
    EXPECT_EQ(detail::c0_cmc(A0, Q(0)), Q(92));
    EXPECT_EQ(2 * (detail::c0_cmc(A0, Q(0)) + 1), Q(186));
}

TEST(CmcConstants, DoubleExamples)
{
    EXPECT_LE(rel_diff(delta_param(ParamPoint{3, 0.5}), 5.0 / 108.0), 2e-16);
    EXPECT_EQ(delta_param(ParamPoint{3, 0.0}), 1.0 / 6.0);
    EXPECT_EQ(c0_cmc(ParamPoint{3, 0.0}), 92.0);
    EXPECT_EQ(closure_coefficients(ParamPoint{3, 0.0}).a, 186.0);
    EXPECT_EQ(cal_constants(ParamPoint{3, 0.0}).calC1, 186.0);

    EXPECT_LE(rel_diff(c0_cmc(ParamPoint{5, 0.3}), fixtures::kC0_5_03), 1e-12);
    EXPECT_LE(rel_diff(b0_raw(ParamPoint{10, 0.1}), fixtures::kB0Raw_10_01), 1e-12);
    EXPECT_NEAR(b0_raw(ParamPoint{10, 0.1}), 9104.4, 1.0);
    EXPECT_LE(rel_diff(cal_constants(ParamPoint{5, 0.3}).calC1, fixtures::kCalC1_5_03), 1e-12);
    EXPECT_LE(rel_diff(cal_constants(ParamPoint{10, 0.1}).calC2, fixtures::kCalC2_10_01), 1e-12);
}

TEST(CmcConstants, DimensionTwoIsDegenerate)
{
    const double top = std::sqrt(2.0 / 2.0);
    for (int k = 0; k < 100; ++k) {
        const ParamPoint p{2, top * k / 100.0};
        EXPECT_LT(b0_raw(p), 0.0);
        EXPECT_EQ(b0_cmc(p), 0.0);
        EXPECT_EQ(closure_coefficients(p).b, 0.0);
        EXPECT_EQ(cal_constants(p).calC2, 0.0);
    }
}

TEST(CmcConstants, BundleInvariants)
{
    for (int n = 2; n <= 12; ++n) {
        const double top = std::sqrt(2.0 / n);
        for (int k = 0; k < 200; ++k) {
            const ParamPoint p{n, 0.97 * top * k / 200.0};
            const auto b = cmc_bundle(p);
            EXPECT_GT(b.delta, 0.0);
            EXPECT_GT(b.C0, 0.0);
            EXPECT_EQ(b.B0, std::max(0.0, b.B0_raw));
            EXPECT_GT(b.a, 2.0);
            EXPECT_GE(b.b, 0.0);
            EXPECT_GT(b.calC1, 0.0);
            EXPECT_GE(b.calC2, 0.0);
            EXPECT_EQ(b.calC2 == 0.0, b.b == 0.0);
            EXPECT_EQ(b.calC1, cal_constants(p).calC1);
            EXPECT_EQ(b.a, closure_coefficients(p).a);
        }
    }
}

TEST(CmcConstants, ComposedMatchesExpandedWithinFourUlp)
{
    std::uint64_t worst = 0;
    for (int n = 2; n <= 12; ++n) {
        const double top = std::sqrt(2.0 / n);
        for (int k = 0; k < 300; ++k) {
            const ParamPoint p{n, 0.95 * top * k / 300.0};
            worst = std::max(worst, ulp_distance(cal_constants(p).calC1, expanded::cal_c1(p.n, p.q)));
        }
    }
    EXPECT_LE(worst, 4u);
}

TEST(CmcConstants, DomainErrors)
{
    const ParamPoint outside{3, 0.9};
    EXPECT_THROW(delta_param(outside), DomainError);
    EXPECT_THROW(c0_cmc(outside), DomainError);
    EXPECT_THROW(b0_raw(outside), DomainError);
    EXPECT_THROW(cmc_bundle(outside), DomainError);
    EXPECT_THROW(local_estimate(outside, CmcScale{0.0, 1.0, 0.5}), DomainError);
}

TEST(CmcScale, Validation)
{
    const ParamPoint p{3, 0.1};
    EXPECT_THROW(local_estimate(p, CmcScale{0.0, 0.0, 0.5}), DomainError);
    EXPECT_THROW(local_estimate(p, CmcScale{0.0, -1.0, 0.5}), DomainError);
    EXPECT_THROW(local_estimate(p, CmcScale{0.0, 1.0, 0.0}), DomainError);
    EXPECT_THROW(local_estimate(p, CmcScale{0.0, 1.0, 1.0}), DomainError);
    EXPECT_THROW(local_estimate(p, CmcScale{std::numeric_limits<double>::infinity(), 1.0, 0.5}), DomainError);
    EXPECT_THROW(local_estimate(p, CmcScale{std::numeric_limits<double>::quiet_NaN(), 1.0, 0.5}), DomainError);
    EXPECT_NO_THROW(local_estimate(p, CmcScale{-3.0, 1.0, 0.5}));
}

TEST(LocalEstimate, Examples)
{
    const ParamPoint p{5, 0.3};
    const auto cal = cal_constants(p);

    const auto minimal = local_estimate(p, CmcScale{0.0, 7.0, 0.25});
    EXPECT_EQ(minimal.curvature_coefficient, 0.0);
    EXPECT_EQ(minimal.regime, Regime::MinimalLike);
    EXPECT_LE(rel_diff(minimal.gradient_coefficient, cal.calC1 / std::pow(0.75 * 7.0, 2.6)), 1e-14);

    EXPECT_EQ(local_estimate(p, CmcScale{2.0, 1.0, 0.5}).regime, Regime::MinimalLike);
    EXPECT_EQ(local_estimate(p, CmcScale{-2.0, 1.0, 0.5}).regime, Regime::MinimalLike);
    EXPECT_EQ(local_estimate(p, CmcScale{1.0, 4.0, 0.5}).regime, Regime::CurvatureDominated);

    const auto at_one = local_estimate(p, CmcScale{1.0, 1.0, 0.5});
    EXPECT_LE(rel_diff(at_one.gradient_coefficient, cal.calC1 * std::pow(2.0, 2.6)), 1e-14);
    EXPECT_LE(rel_diff(at_one.curvature_coefficient, cal.calC2), 1e-15);
    EXPECT_LE(rel_diff(at_one.combined_small_scale, (cal.calC1 + cal.calC2) * std::pow(2.0, 2.6)), 1e-14);

    EXPECT_STREQ(to_string(Regime::MinimalLike), "MinimalLike");
    EXPECT_STREQ(to_string(Regime::CurvatureDominated), "CurvatureDominated");
}

TEST(LocalEstimate, SignOfHIsIrrelevant)
{
    const ParamPoint p{8, 0.2};
    const auto plus = local_estimate(p, CmcScale{0.7, 2.0, 0.3});
    const auto minus = local_estimate(p, CmcScale{-0.7, 2.0, 0.3});
    EXPECT_EQ(plus.curvature_coefficient, minus.curvature_coefficient);
    EXPECT_EQ(plus.gradient_coefficient, minus.gradient_coefficient);
    EXPECT_EQ(plus.regime, minus.regime);
}

TEST(LocalEstimate, DominanceBelowThreshold)
{
    std::mt19937_64 rng(20261017);
    std::uniform_int_distribution<int> dim(2, 12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    while (checked < 2000) {
        const int n = dim(rng);
        const ParamPoint p{n, 0.95 * std::sqrt(2.0 / n) * unit(rng)};
        const double theta = 0.01 + 0.98 * unit(rng);
        const double R = std::exp(8.0 * unit(rng) - 4.0);
        const double H = (unit(rng) < 0.5 ? -1.0 : 1.0) * unit(rng) / ((1.0 - theta) * R);
        const auto est = local_estimate(p, CmcScale{H, R, theta});
        ASSERT_EQ(est.regime, Regime::MinimalLike);
        const double small = cal_constants(p).calC2 / std::pow((1.0 - theta) * R, 2.0 + 2.0 * p.q);
        EXPECT_LE(est.curvature_coefficient, small * (1.0 + 8e-16));
        EXPECT_LE(est.gradient_coefficient + est.curvature_coefficient, est.combined_small_scale * (1.0 + 8e-16));
        ++checked;
    }
}

TEST(LocalEstimate, GradientDecreasingInRadius)
{
    for (const ParamPoint p : {ParamPoint{2, 0.5}, ParamPoint{5, 0.3}, ParamPoint{11, 0.05}}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 1000; ++k) {
            const double R = 0.01 * k;
            const double g = local_estimate(p, CmcScale{0.0, R, 0.5}).gradient_coefficient;
            EXPECT_LT(g, prev) << R;
            prev = g;
        }
    }
}

TEST(ThresholdRadius, Examples)
{
    EXPECT_EQ(threshold_radius(2.0, 0.5), 1.0);
    EXPECT_EQ(threshold_radius(-2.0, 0.5), 1.0);
    EXPECT_TRUE(std::isinf(threshold_radius(0.0, 0.5)));
    EXPECT_GT(threshold_radius(0.0, 0.5), 0.0);
    EXPECT_NEAR(threshold_radius(0.1, 0.9), 100.0, 1e-12);
    // The returned radius sits exactly on the inclusive side of the threshold.
    const ParamPoint p{4, 0.2};
    for (const double H : {0.3, 1.7, 12.5}) {
        for (const double theta : {0.1, 0.5, 0.9}) {
            const double R = threshold_radius(H, theta);
            EXPECT_LE(H * (1.0 - theta) * R, 1.0 + 4e-16);
        }
    }
    EXPECT_EQ(local_estimate(p, CmcScale{2.0, threshold_radius(2.0, 0.5), 0.5}).regime, Regime::MinimalLike);
}
