#!/usr/bin/env python3
"""Extended-precision reference values for the unit tests.

Evaluates every constant from its fully expanded closed form with mpmath at
50 significant digits. The q inputs are the exact binary64 values used by the
C++ tests. Run this script to regenerate the numbers frozen in
tests/test_fixtures.hpp.
"""
from mpmath import mp, mpf, sqrt, log, exp, findroot

mp.dps = 50


def gap(n, q):
    return mpf(2) / n - q * q


def c1(n, q):
    A = gap(n, q)
    return 2 / A + 8 * (q * q + 2 * q + 2) / A**2


def c_young(n, q):
    A = gap(n, q)
    pre = mpf(2) ** (1 + q) * (q**q if q > 0 else 1) / (1 + q) ** (1 + q)
    inner = (2 + q) * (1 + 2 * (1 + q) / A + 8 * (1 + q) * (q * q + 2 * q + 2) / A**2)
    return pre * inner ** (1 + q)


def c_holder(n, q):
    A = gap(n, q)
    inner = 2 * (1 + q) ** 2 * (1 + 2 * (1 + q) ** 2 / A + 8 * (1 + q) ** 2 * (q * q + 2 * q + 2) / A**2)
    return inner ** (1 + q)


def f_bound(q):
    return (1 + q) ** 4 / (q ** (q / (1 + q)) * (2 + q))


def g_prime(q):
    return 4 / (1 + q) - 1 / (2 + q) - log(q) / (1 + q) ** 2 - 1 / (1 + q)


def c0(n, q):
    A = gap(n, q)
    d = A / (4 * (1 + q) ** 2)
    return 4 * (1 + d) * (1 + q) ** 2 / A + 16 * (1 + q) ** 2 * (1 + (1 + d) ** 2 * (1 + q) ** 2) / A**2


def b0_raw(n, q):
    A = gap(n, q)
    return 4 * n * (n - 2) ** 2 * (1 + q) ** 2 / ((n - 1) * A**2) - 8 * n / A - n / (1 + q) ** 2


def cal_c1(n, q):
    return mpf(2) ** q * (2 * (1 + q) ** 2 * (c0(n, q) + 1)) ** (1 + q)


def cal_c2(n, q):
    b = max(mpf(0), 2 * (1 + q) ** 2 * max(mpf(0), b0_raw(n, q)) - n)
    return mpf(2) ** q * b ** (1 + q) if b > 0 else mpf(0)


def show(label, v):
    print(f"{label:40s} {mp.nstr(v, 30)}")


if __name__ == "__main__":
    show("alpha(3)", mpf(3) / sqrt(6))
    show("okumura(3)", mpf(1) / sqrt(6))
    show("alpha(4)", mpf(8) / sqrt(12))
    show("sqrt(2/5)", sqrt(mpf(2) / 5))
    show("sqrt(2/3)", sqrt(mpf(2) / 3))
    show("c1(5,0.55)", c1(5, mpf(0.55)))
    show("c_young(3,0.125)", c_young(3, mpf(0.125)))
    show("c_holder(3,0.125)", c_holder(3, mpf(0.125)))
    show("f_bound(0.125)", f_bound(mpf(0.125)))
    show("f_bound(0.5)", f_bound(mpf(0.5)))
    show("g_prime(0.5)", g_prime(mpf(0.5)))
    show("c0(5,0.3)", c0(5, mpf(0.3)))
    show("b0_raw(10,0.1)", b0_raw(10, mpf(0.1)))
    show("cal_c1(5,0.3)", cal_c1(5, mpf(0.3)))
    show("cal_c2(10,0.1)", cal_c2(10, mpf(0.1)))
    show("c_young(5,0.3)", c_young(5, mpf(0.3)))
    show("c_holder(5,0.3)", c_holder(5, mpf(0.3)))
    show("c_young(2,0.7)", c_young(2, mpf(0.7)))
    show("c_holder(2,0.7)", c_holder(2, mpf(0.7)))
    show("root f=1", findroot(lambda q: f_bound(q) - 1, mpf(0.2)))
    for n in range(2, 13):
        # crossover of c_young and c_holder above 1/8, if any
        hi = sqrt(mpf(2) / n) * (1 - mpf(10) ** -6)
        N = 4000
        prev = None
        root = None
        for k in range(N + 1):
            q = mpf(1) / 8 + (hi - mpf(1) / 8) * k / N
            s = c_young(n, q) - c_holder(n, q)
            if prev is not None and prev > 0 and s <= 0:
                root = findroot(lambda x: c_young(n, x) - c_holder(n, x), q)
                break
            prev = s
        print(f"crossover n={n}: {mp.nstr(root, 20) if root is not None else 'none'}")
