#pragma once

#include <cmath>

namespace ssy::detail {

// Closed forms are evaluated in the widest native format and rounded once,
// so the binary64 results sit within an ulp or two of the exact values.
using Wide = long double;

// A(n,q) from its compensated double-double form.
Wide gap_wide(int n, double q);

// x^(1+q) as x * x^q. Rounding 1 + q first would perturb the exponent by up
// to half an ulp of 1, which costs ln(x) of that in relative accuracy.
inline double pow_one_plus(double x, double q)
{
    return x * std::pow(x, q);
}

inline Wide pow_one_plus(Wide x, Wide q)
{
    return x * std::pow(x, q);
}

// q^q with 0^0 = 1.
inline Wide pow_self_wide(Wide q)
{
    return q == 0 ? Wide(1) : std::exp(q * std::log(q));
}

// q^(q/(1+q)) with the same extension.
inline Wide pow_self_scaled_wide(Wide q)
{
    return q == 0 ? Wide(1) : std::exp(q * std::log(q) / (1 + q));
}

} // namespace ssy::detail
