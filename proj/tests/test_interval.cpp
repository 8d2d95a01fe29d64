#include "ssy/errors.hpp"
#include "ssy/interval.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace ssy;

namespace {

Interval random_interval(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    const double a = u(rng);
    const double b = u(rng);
    return {std::min(a, b), std::max(a, b)};
}

double sample(std::mt19937_64& rng, const Interval& x)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double v = x.lo() + u(rng) * (x.hi() - x.lo());
    return std::clamp(v, x.lo(), x.hi());
}

} // namespace

TEST(Interval, Construction)
{
    EXPECT_THROW(Interval(2.0, 1.0), DomainError);
    EXPECT_THROW(Interval(std::numeric_limits<double>::quiet_NaN()), DomainError);
    EXPECT_THROW(Interval(0.0, std::numeric_limits<double>::infinity()), DomainError);
    const Interval p(0.5);
    EXPECT_TRUE(p.is_point());
    EXPECT_EQ(p.mid(), 0.5);
    EXPECT_TRUE(Interval(-1.0, 2.0).contains(Interval(0.0, 1.0)));
    EXPECT_FALSE(Interval(0.0, 1.0).contains(1.5));
    EXPECT_EQ(round_up(1.0), std::nextafter(1.0, 2.0));
    EXPECT_EQ(round_down(1.0, 2), std::nextafter(std::nextafter(1.0, 0.0), 0.0));
}

TEST(Interval, ArithmeticContainsSampledResults)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        const Interval a = random_interval(rng, -5.0, 5.0);
        const Interval b = random_interval(rng, -5.0, 5.0);
        const Interval pos = random_interval(rng, 0.01, 9.0);
        const double x = sample(rng, a);
        const double y = sample(rng, b);
        const double z = sample(rng, pos);
        EXPECT_TRUE((a + b).contains(x + y));
        EXPECT_TRUE((a - b).contains(x - y));
        EXPECT_TRUE((-a).contains(-x));
        EXPECT_TRUE((a * b).contains(x * y));
        EXPECT_TRUE((a / pos).contains(x / z));
        EXPECT_TRUE(sqr(a).contains(x * x));
        EXPECT_GE(sqr(a).lo(), 0.0);
        EXPECT_TRUE(sqrt(pos).contains(std::sqrt(z)));
        EXPECT_TRUE(exp(a).contains(std::exp(x)));
        EXPECT_TRUE(log(pos).contains(std::log(z)));
        EXPECT_TRUE(log1p(pos).contains(std::log1p(z)));
        EXPECT_TRUE(pow(pos, a).contains(std::pow(z, x)));
        EXPECT_TRUE(xlogx(pos).contains(z * std::log(z)));
        EXPECT_TRUE(pow_self(pos).contains(std::pow(z, z)));
        EXPECT_TRUE(hull(a, b).contains(a));
        EXPECT_TRUE(hull(a, b).contains(b));
    }
}

TEST(Interval, DomainErrors)
{
    EXPECT_THROW(Interval(1.0) / Interval(-1.0, 1.0), DomainError);
    EXPECT_THROW(Interval(1.0) / Interval(0.0), DomainError);
    EXPECT_THROW(log(Interval(0.0, 1.0)), DomainError);
    EXPECT_THROW(sqrt(Interval(-1.0, 1.0)), DomainError);
    EXPECT_THROW(xlogx(Interval(-0.1, 0.5)), DomainError);
    EXPECT_THROW(pow(Interval(-1.0, 2.0), Interval(0.5)), DomainError);
}

TEST(Interval, ZeroExtensions)
{
    EXPECT_TRUE(xlogx(Interval(0.0)).contains(0.0));
    EXPECT_TRUE(pow_self(Interval(0.0)).contains(1.0));
    const Interval around = pow_self(Interval(0.0, 1.0));
    EXPECT_TRUE(around.contains(1.0));
    EXPECT_TRUE(around.contains(std::exp(-std::exp(-1.0))));
    EXPECT_LE(around.lo(), std::exp(-std::exp(-1.0)));
    EXPECT_TRUE(xlogx(Interval(0.0, 1.0)).contains(-std::exp(-1.0)));
}

TEST(Interval, PointEnclosuresAreTight)
{
    for (const double x : {0.1, 0.5, 1.7, 3.0}) {
        const Interval p(x);
        EXPECT_LE((p * p).width(), 4 * std::abs(std::nextafter(x * x, 1e300) - x * x));
        const Interval e = exp(p);
        EXPECT_LE(e.width(), 16 * (std::nextafter(e.hi(), 1e300) - e.hi()));
    }
}
