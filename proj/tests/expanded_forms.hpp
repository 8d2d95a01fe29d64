#pragma once

// Fully multiplied-out closed forms, evaluated in long double from the exact
// value of the double q. Used as the second route in dual-evaluation checks.

#include <cmath>

namespace ssy::expanded {

using L = long double;

inline L gap(int n, double q)
{
    // q^2 needs 106 bits; split q so both halves square exactly in 64 bits.
    const L hi = static_cast<L>(static_cast<float>(q));
    const L lo = static_cast<L>(q) - hi;
    return 2.0L / n - (hi * hi + 2 * hi * lo + lo * lo);
}

// 2^(1+q) q^q (2+q)^(1+q) (2(1+q)A + 8(1+q)B + A^2)^(1+q) / ((1+q)^(1+q) A^(2+2q))
inline double c_young(int n, double qd)
{
    const L q = qd, A = gap(n, qd), B = q * q + 2 * q + 2, e = 1 + q;
    const L num = 2 * (1 + q) * A + 8 * (1 + q) * B + A * A;
    const L self = qd == 0 ? 1.0L : std::pow(q, q);
    return static_cast<double>(std::pow(2.0L, e) * self * std::pow(2 + q, e) * std::pow(num, e) /
                               (std::pow(1 + q, e) * std::pow(A, 2 * e)));
}

// (2(1+q)^2)^(1+q) (2(1+q)^2 A + 8(1+q)^2 B + A^2)^(1+q) / A^(2+2q)
inline double c_holder(int n, double qd)
{
    const L q = qd, A = gap(n, qd), B = q * q + 2 * q + 2, e = 1 + q, s = (1 + q) * (1 + q);
    const L num = 2 * s * A + 8 * s * B + A * A;
    return static_cast<double>(std::pow(2 * s, e) * std::pow(num, e) / std::pow(A, 2 * e));
}

// 2^q (2(1+q)^2)^(1+q) (4(1+d)(1+q)^2 A + 16(1+q)^2(1 + (1+d)^2(1+q)^2) + A^2)^(1+q) / A^(2+2q)
inline double cal_c1(int n, double qd)
{
    const L q = qd, A = gap(n, qd), e = 1 + q, s = (1 + q) * (1 + q), d = A / (4 * s);
    const L num = 4 * (1 + d) * s * A + 16 * s * (1 + (1 + d) * (1 + d) * s) + A * A;
    return static_cast<double>(std::pow(2.0L, q) * std::pow(2 * s, e) * std::pow(num, e) / std::pow(A, 2 * e));
}

} // namespace ssy::expanded
