#pragma once

#include <string>

namespace ssy {

// Closed interval [lo, hi] of finite binary64 numbers with outward-widened
// arithmetic: every operation returns an interval containing the exact image
// of its operands.
//
// Rounding policy: IEEE correctly rounded operations (+ - * / sqrt) are
// rounded outward using their exact residuals (TwoSum, fma), so exact results
// stay exact and inexact ones move one ulp; results of libm transcendentals
// (exp, log, log1p) are pushed out by four ulps per endpoint.
class Interval {
public:
    Interval() : Interval(0.0) {}
    Interval(double value);  // NOLINT(google-explicit-constructor): point intervals mix with scalars
    Interval(double lo, double hi);

    [[nodiscard]] double lo() const { return lo_; }
    [[nodiscard]] double hi() const { return hi_; }
    [[nodiscard]] double width() const { return hi_ - lo_; }
    [[nodiscard]] double mid() const;
    [[nodiscard]] bool contains(double x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const Interval& other) const
    {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }
    [[nodiscard]] std::string to_string() const;

private:
    double lo_;
    double hi_;
};

// Steps x down / up by the given number of ulps.
double round_down(double x, int ulps = 1);
double round_up(double x, int ulps = 1);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws DomainError when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
// Throws DomainError unless x.lo() > 0.
Interval log(const Interval& x);
Interval log1p(const Interval& x);
// x^y for x > 0, via exp(y log x).
Interval pow(const Interval& x, const Interval& y);
// x log x for x >= 0 with 0 log 0 = 0, using its monotone pieces around 1/e.
Interval xlogx(const Interval& x);
// x^x for x >= 0 with 0^0 = 1 (minimum e^(-1/e) at x = 1/e).
Interval pow_self(const Interval& x);

Interval hull(const Interval& a, const Interval& b);

} // namespace ssy
