#include "rational_oracle.hpp"
#include "test_fixtures.hpp"

#include "ssy/errors.hpp"
#include "ssy/param_domain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace ssy;
using ssy::fixtures::rel_diff;

TEST(ParamPoint, RejectsInvalidCoordinates)
{
    EXPECT_THROW(ParamPoint(1, 0.1), DomainError);
    EXPECT_THROW(ParamPoint(3, -0.1), DomainError);
    EXPECT_THROW(ParamPoint(3, std::numeric_limits<double>::quiet_NaN()), DomainError);
    EXPECT_THROW(ParamPoint(3, std::numeric_limits<double>::infinity()), DomainError);
    EXPECT_NO_THROW(ParamPoint(2, 0.0));
    EXPECT_NO_THROW(ParamPoint(3, 5.0));  // outside the gap but a valid coordinate
}

TEST(StabilityGap, Examples)
{
    EXPECT_DOUBLE_EQ(stability_gap(3, 0.0), 2.0 / 3.0);
    EXPECT_NEAR(stability_gap(5, 0.5), 0.15, 1e-16);
    EXPECT_NEAR(stability_gap(3, std::sqrt(2.0 / 3.0)), 0.0, 1e-16);
    EXPECT_LT(stability_gap(3, 0.9), 0.0);
}

TEST(StabilityGap, CompensatedNearBoundary)
{
    // The naive 2/n - q^2 loses every digit here; the exact value of the
    // double q is known from the rational oracle.
    const double q = std::nextafter(std::sqrt(2.0 / 3.0), 0.0);
    const rational::Q exact = rational::gap(3, rational::Q(q));
    const double expect = static_cast<double>(exact);
    ASSERT_GT(expect, 0.0);
    EXPECT_LE(rel_diff(stability_gap(3, q), expect), 4e-16);
}

TEST(StabilityGap, StrictlyDecreasing)
{
    for (int n = 2; n <= 12; ++n) {
        const double top = std::sqrt(2.0 / n);
        double prev = stability_gap(n, 0.0);
        for (int k = 1; k < 1000; ++k) {
            const double a = stability_gap(n, top * k / 1000.0);
            EXPECT_LT(a, prev);
            EXPECT_GT(a, 0.0);
            prev = a;
        }
    }
    for (const double q : {0.0, 0.1, 0.3}) {
        for (int n = 2; n < 12; ++n) {
            EXPECT_GT(stability_gap(n, q), stability_gap(n + 1, q));
        }
    }
}

TEST(QuadraticAux, Examples)
{
    EXPECT_EQ(quadratic_aux(0.0), 2.0);
    EXPECT_EQ(quadratic_aux(1.0), 5.0);
    EXPECT_EQ(quadratic_aux(0.5), 3.25);
}

TEST(DFactor, ExactAtZero)
{
    using rational::Q;
    EXPECT_EQ(detail::d_factor(rational::gap(3, Q(0)), Q(0)), Q(40));
    EXPECT_EQ(detail::d_factor(rational::gap(2, Q(0)), Q(0)), Q(19));
    EXPECT_NEAR(d_factor(ParamPoint{3, 0.0}), 40.0, 1e-13);
    EXPECT_NEAR(d_factor(ParamPoint{2, 0.0}), 19.0, 1e-13);
    EXPECT_GT(d_factor(ParamPoint{7, 0.4}), 1.0);
    EXPECT_THROW(d_factor(ParamPoint{3, 0.9}), DomainError);
}

TEST(StructuralCoefficients, Examples)
{
    const auto s2 = structural_coefficients(2);
    EXPECT_EQ(s2.alpha, 0.0);
    EXPECT_EQ(s2.okumura, 0.0);
    EXPECT_EQ(s2.kato, 2.0);

    const auto s3 = structural_coefficients(3);
    EXPECT_LE(rel_diff(s3.alpha, fixtures::kAlpha3), 1e-15);
    EXPECT_LE(rel_diff(s3.okumura, fixtures::kOkumura3), 1e-15);
    EXPECT_LE(fixtures::ulp_distance(s3.kato, 5.0 / 3.0), 1u);

    const auto s4 = structural_coefficients(4);
    EXPECT_LE(rel_diff(s4.alpha, fixtures::kAlpha4), 1e-15);
    EXPECT_EQ(s4.kato, 1.5);

    EXPECT_THROW(structural_coefficients(1), DomainError);
}

TEST(StructuralCoefficients, Relations)
{
    using rational::Q;
    for (int n = 2; n <= 40; ++n) {
        const auto s = structural_coefficients(n);
        EXPECT_LE(std::abs(s.alpha - n * s.okumura), 4e-16 * s.alpha);
        EXPECT_DOUBLE_EQ(s.kato, 1.0 + 2.0 / n);
        EXPECT_GE(s.okumura, 0.0);
        EXPECT_EQ(s.okumura == 0.0, n == 2);
        // alpha^2 = n^2 (n-2)^2 / (n (n-1)) = n (n-2)^2 / (n-1)
        const Q nn(n);
        const Q lhs = nn * nn * (nn - 2) * (nn - 2) / (nn * (nn - 1));
        const Q rhs = nn * (nn - 2) * (nn - 2) / (nn - 1);
        EXPECT_EQ(lhs, rhs);
        EXPECT_LE(rel_diff(s.alpha * s.alpha + 1e-300, static_cast<double>(rhs) + 1e-300), 1e-15);
    }
}

TEST(AdmissibleDomain, Examples)
{
    const auto d5 = admissible_q_domain(5);
    EXPECT_FALSE(d5.empty);
    EXPECT_EQ(d5.lower, 0.0);
    EXPECT_LE(rel_diff(d5.upper, fixtures::kSqrt2Over5), 1e-16);
    EXPECT_TRUE(d5.lower_open && d5.upper_open);
    EXPECT_EQ(admissible_q_domain(2).upper, 1.0);
    EXPECT_EQ(admissible_q_domain(8).upper, 0.5);
    EXPECT_THROW(admissible_q_domain(1), DomainError);
}

TEST(BernsteinRange, Examples)
{
    const auto r5 = bernstein_range(5);
    ASSERT_FALSE(r5.empty);
    EXPECT_EQ(r5.lower, 0.5);
    EXPECT_EQ(r5.upper, std::sqrt(0.4));
    EXPECT_FALSE(r5.contains(0.5));
    EXPECT_TRUE(r5.contains(0.55));
    EXPECT_TRUE(bernstein_range(6).empty);
    const auto r3 = bernstein_range(3);
    EXPECT_EQ(r3.lower, 0.0);
    EXPECT_LE(rel_diff(r3.upper, fixtures::kSqrt2Over3), 1e-16);
    EXPECT_THROW(bernstein_range(0), DomainError);
}

TEST(BernsteinRange, NonemptyExactlyBelowSix)
{
    for (int n = 2; n <= 12; ++n) {
        const auto r = bernstein_range(n);
        EXPECT_EQ(r.empty, n >= 6) << "n = " << n;
        EXPECT_FALSE(r.contains(0.1) && r.empty);
        if (!r.empty) {
            EXPECT_LT(r.lower, r.upper);
            for (int k = 1; k < 200; ++k) {
                const double q = r.lower + r.width() * k / 200.0;
                EXPECT_LT(decay_exponent(ParamPoint{n, q}), 0.0);
            }
        }
    }
}

TEST(DecayExponent, Examples)
{
    EXPECT_NEAR(decay_exponent(ParamPoint{5, 0.55}), -0.1, 1e-15);
    EXPECT_EQ(decay_exponent(ParamPoint{5, 0.5}), 0.0);
    EXPECT_NEAR(decay_exponent(ParamPoint{3, 0.1}), -1.2, 1e-15);
}

TEST(QInterval, Representation)
{
    const auto none = QInterval::none();
    EXPECT_TRUE(none.empty);
    EXPECT_FALSE(none.contains(0.0));
    EXPECT_EQ(none.width(), 0.0);
    EXPECT_EQ(none.to_string(), "empty");
    const auto c = QInterval::closed(0.25, 0.5);
    EXPECT_TRUE(c.contains(0.25));
    EXPECT_TRUE(c.contains(0.5));
    EXPECT_EQ(c.to_string(), "[0.25, 0.5]");
    const auto o = QInterval::open(0.25, 0.5);
    EXPECT_FALSE(o.contains(0.25));
    EXPECT_EQ(o.to_string(), "(0.25, 0.5)");
}

TEST(RequirePositiveGap, MessageCitesBoundary)
{
    try {
        require_positive_gap(ParamPoint{5, 0.7});
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("sqrt(2/5)"), std::string::npos) << what;
    }
    EXPECT_DOUBLE_EQ(require_positive_gap(ParamPoint{5, 0.5}), stability_gap(5, 0.5));
}
