#include "ssy/interval.hpp"

#include "ssy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ssy {

namespace {

constexpr int kArithUlps = 1;
constexpr int kLibmUlps = 4;
constexpr double kInvE = 0.36787944117144233;  // nearest double to 1/e

Interval widened(double lo, double hi, int ulps)
{
    return {round_down(lo, ulps), round_up(hi, ulps)};
}

// Directed rounding of the IEEE operations from round-to-nearest results and
// their exact residuals. Near the underflow range residuals are not exact, so
// the result is pushed out by one ulp unconditionally there.
constexpr double kTiny = 0x1p-960;

double step(double x, double residual)
{
    if (residual < 0.0) {
        return round_down(x, kArithUlps);
    }
    if (residual > 0.0) {
        return round_up(x, kArithUlps);
    }
    return x;
}

// Exact error (a + b) - s, TwoSum.
double add_residual(double a, double b, double s)
{
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

double add_down(double a, double b)
{
    const double s = a + b;
    return add_residual(a, b, s) < 0.0 ? round_down(s, kArithUlps) : s;
}

double add_up(double a, double b)
{
    const double s = a + b;
    return add_residual(a, b, s) > 0.0 ? round_up(s, kArithUlps) : s;
}

double mul_down(double a, double b)
{
    const double p = a * b;
    if (std::abs(p) < kTiny) {
        return (a == 0.0 || b == 0.0) ? 0.0 : round_down(p, kArithUlps);
    }
    return std::min(p, step(p, std::fma(a, b, -p)));
}

double mul_up(double a, double b)
{
    const double p = a * b;
    if (std::abs(p) < kTiny) {
        return (a == 0.0 || b == 0.0) ? 0.0 : round_up(p, kArithUlps);
    }
    return std::max(p, step(p, std::fma(a, b, -p)));
}

// Sign of a/b - r is the sign of (a - r b) / b.
double div_down(double a, double b)
{
    const double r = a / b;
    if (std::abs(r) < kTiny || std::abs(a) < kTiny) {
        return a == 0.0 ? 0.0 : round_down(r, kArithUlps);
    }
    const double residual = std::fma(-r, b, a);
    return std::min(r, step(r, b > 0.0 ? residual : -residual));
}

double div_up(double a, double b)
{
    const double r = a / b;
    if (std::abs(r) < kTiny || std::abs(a) < kTiny) {
        return a == 0.0 ? 0.0 : round_up(r, kArithUlps);
    }
    const double residual = std::fma(-r, b, a);
    return std::max(r, step(r, b > 0.0 ? residual : -residual));
}

double sqrt_down(double x)
{
    const double r = std::sqrt(x);
    if (x < kTiny) {
        return x == 0.0 ? 0.0 : std::max(0.0, round_down(r, kArithUlps));
    }
    return std::min(r, step(r, std::fma(-r, r, x)));
}

double sqrt_up(double x)
{
    const double r = std::sqrt(x);
    if (x < kTiny) {
        return x == 0.0 ? 0.0 : round_up(r, kArithUlps);
    }
    return std::max(r, step(r, std::fma(-r, r, x)));
}

} // namespace

double round_down(double x, int ulps)
{
    for (int i = 0; i < ulps; ++i) {
        x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    }
    return x;
}

double round_up(double x, int ulps)
{
    for (int i = 0; i < ulps; ++i) {
        x = std::nextafter(x, std::numeric_limits<double>::infinity());
    }
    return x;
}

Interval::Interval(double value) : lo_(value), hi_(value)
{
    if (!std::isfinite(value)) {
        throw DomainError("interval endpoints must be finite");
    }
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("interval endpoints must be finite");
    }
    if (lo > hi) {
        throw DomainError("interval lower endpoint exceeds upper endpoint");
    }
}

double Interval::mid() const
{
    return lo_ + (hi_ - lo_) / 2.0;
}

std::string Interval::to_string() const
{
    std::ostringstream out;
    out.precision(17);
    out << '[' << lo_ << ", " << hi_ << ']';
    return out.str();
}

Interval operator+(const Interval& a, const Interval& b)
{
    return {add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi())};
}

Interval operator-(const Interval& a, const Interval& b)
{
    return {add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo())};
}

Interval operator-(const Interval& a)
{
    return {-a.hi(), -a.lo()};
}

Interval operator*(const Interval& a, const Interval& b)
{
    const double lo = std::min({mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()), mul_down(a.hi(), b.lo()),
                                mul_down(a.hi(), b.hi())});
    const double hi = std::max({mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()), mul_up(a.hi(), b.lo()),
                                mul_up(a.hi(), b.hi())});
    return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.lo() <= 0.0 && b.hi() >= 0.0) {
        throw DomainError("interval division by an interval containing zero: " + b.to_string());
    }
    const double lo = std::min({div_down(a.lo(), b.lo()), div_down(a.lo(), b.hi()), div_down(a.hi(), b.lo()),
                                div_down(a.hi(), b.hi())});
    const double hi = std::max({div_up(a.lo(), b.lo()), div_up(a.lo(), b.hi()), div_up(a.hi(), b.lo()),
                                div_up(a.hi(), b.hi())});
    return {lo, hi};
}

Interval sqr(const Interval& x)
{
    const double m = std::min(std::abs(x.lo()), std::abs(x.hi()));
    const double M = std::max(std::abs(x.lo()), std::abs(x.hi()));
    if (x.lo() <= 0.0 && x.hi() >= 0.0) {
        return {0.0, mul_up(M, M)};
    }
    return {mul_down(m, m), mul_up(M, M)};
}

Interval sqrt(const Interval& x)
{
    if (x.lo() < 0.0) {
        throw DomainError("interval sqrt of a negative range: " + x.to_string());
    }
    return {sqrt_down(x.lo()), sqrt_up(x.hi())};
}

Interval exp(const Interval& x)
{
    const double h = std::exp(x.hi());
    if (!std::isfinite(h)) {
        throw DomainError("interval exp overflow");
    }
    return {std::max(0.0, round_down(std::exp(x.lo()), kLibmUlps)), round_up(h, kLibmUlps)};
}

Interval log(const Interval& x)
{
    if (!(x.lo() > 0.0)) {
        throw DomainError("interval log of a range touching zero: " + x.to_string());
    }
    return widened(std::log(x.lo()), std::log(x.hi()), kLibmUlps);
}

Interval log1p(const Interval& x)
{
    if (!(x.lo() > -1.0)) {
        throw DomainError("interval log1p of a range touching -1: " + x.to_string());
    }
    return widened(std::log1p(x.lo()), std::log1p(x.hi()), kLibmUlps);
}

Interval pow(const Interval& x, const Interval& y)
{
    return exp(y * log(x));
}

Interval xlogx(const Interval& x)
{
    if (x.lo() < 0.0) {
        throw DomainError("x log x needs x >= 0: " + x.to_string());
    }
    // Enclose x log x at a single point; exact zero at x = 0.
    auto at = [](double v) -> Interval {
        if (v == 0.0) {
            return Interval(0.0);
        }
        return Interval(v) * log(Interval(v));
    };
    const Interval left = at(x.lo());
    const Interval right = at(x.hi());
    // Decreasing on [0, 1/e], increasing on [1/e, inf); minimum -1/e.
    if (x.hi() <= kInvE * (1.0 - 1e-15)) {
        return {right.lo(), left.hi()};
    }
    if (x.lo() >= kInvE * (1.0 + 1e-15)) {
        return {left.lo(), right.hi()};
    }
    const double minimum = round_down(-kInvE, 2);
    return {minimum, std::max(left.hi(), right.hi())};
}

Interval pow_self(const Interval& x)
{
    return exp(xlogx(x));
}

Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

} // namespace ssy
