#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace ssy::reference {

// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_dec_float_50;

// Every bundle field evaluated from the fully expanded closed forms in
// extended precision. This path shares no code with the binary64 library;
// the input q is taken as the exact value of the given double.
struct Bundle {
    Real A;
    Real C1;
    Real C3;
    Real CY;
    Real C3H;
    Real CH;
    Real ratio;
    Real ratio_root;
    Real f_bound;  // zero when q is outside (0, 1)
    Real delta;
    Real C0;
    Real B0_raw;
    Real B0;
    Real a;
    Real b;
    Real calC1;
    Real calC2;
    // Magnitudes of the largest summand of the fields that are differences
    // (B0_raw, b, calC2); their attainable relative accuracy is set by these.
    Real B0_scale;
    Real b_scale;
    Real calC2_scale;
};

// Requires n >= 2 and 0 <= q < sqrt(2/n).
Bundle evaluate(int n, double q);

} // namespace ssy::reference
