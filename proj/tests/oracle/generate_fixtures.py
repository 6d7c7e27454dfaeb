#!/usr/bin/env python3
"""Regenerates the frozen numerical fixtures used by the test suite.

Everything the C++ code or the tests treat as ground truth is produced
here with mpmath at high working precision:

  fixtures/zeta_zeros_50.txt   first 50 ordinates of the zeta zeros on the
                               critical line, 15 significant digits, one per
                               line ('#' lines are comments)
  fixtures/z_oracle.txt        100 rows "t  Z(t)": t drawn once from a fixed
                               RNG in [1e4, 1e5], Z(t) = mpmath.siegelz to 20
                               significant digits
  ../../src/psi_series.inc     Taylor coefficients (about p = 1/2) of the
                               Riemann-Siegel base function
                               Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p)
  ../../src/gauss_legendre_16.inc
                               16-point Gauss-Legendre nodes and weights
  oracle_constants.hpp         assorted frozen scalars (theta values, Gram
                               point, logarithmic-integral values, ...)

The outputs are committed; rerun only to regenerate after changing this
script.  Requires mpmath.
"""

import os
import random

import mpmath as mp

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")
SRC = os.path.join(HERE, "..", "..", "src")

DEG = 64  # Psi series truncation degree in u = p - 1/2


def psi_series(deg):
    """Taylor coefficients of Psi(1/2 + u) in u.

    With p = 1/2 + u the defining ratio becomes
        Psi(1/2 + u) = -cos(2 pi u^2 - 5 pi / 8) / cos(2 pi u),
    whose numerator and denominator have elementary series; the quotient
    series is the entire continuation of the ratio (the zeros of the
    denominator at u = +-1/4 are removable), so no special handling of
    p = 1/4, 3/4 is ever needed when evaluating through these
    coefficients.
    """
    two_pi = 2 * mp.pi
    A = [mp.mpf(0)] * (deg + 1)  # cos(2 pi u^2)
    B = [mp.mpf(0)] * (deg + 1)  # sin(2 pi u^2)
    k = 0
    while 4 * k <= deg:
        A[4 * k] = (-1) ** k * two_pi ** (2 * k) / mp.factorial(2 * k)
        k += 1
    k = 0
    while 4 * k + 2 <= deg:
        B[4 * k + 2] = (-1) ** k * two_pi ** (2 * k + 1) / mp.factorial(2 * k + 1)
        k += 1
    c58 = mp.cos(5 * mp.pi / 8)
    s58 = mp.sin(5 * mp.pi / 8)
    num = [-(c58 * A[n] + s58 * B[n]) for n in range(deg + 1)]
    den = [mp.mpf(0)] * (deg + 1)  # cos(2 pi u)
    k = 0
    while 2 * k <= deg:
        den[2 * k] = (-1) ** k * two_pi ** (2 * k) / mp.factorial(2 * k)
        k += 1
    quot = [mp.mpf(0)] * (deg + 1)
    for n in range(deg + 1):
        s = num[n]
        for k in range(n):
            s -= quot[k] * den[n - k]
        quot[n] = s / den[0]
    return quot


def gauss_legendre_16():
    """Nodes/weights of 16-point Gauss-Legendre on [-1, 1]."""
    nodes, weights = [], []
    n = 16
    for i in range(1, n // 2 + 1):
        # Chebyshev-style initial guess, polished by Newton on P_16
        x = mp.cos(mp.pi * (i - mp.mpf(1) / 4) / (n + mp.mpf(1) / 2))
        for _ in range(60):
            p0, p1 = mp.mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < mp.mpf(10) ** (-mp.mp.dps + 5):
                break
        p0, p1 = mp.mpf(1), x
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1)
        nodes.append(x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    return nodes, weights  # positive half; the rule is symmetric


def fmt(x, digits=22):
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def write_psi_inc():
    coeffs = psi_series(DEG)
    lines = [
        "// Taylor coefficients of Psi(1/2 + u) = -cos(2*pi*u^2 - 5*pi/8) / cos(2*pi*u)",
        "// about u = 0 (i.e. p = 1/2).  Odd-order coefficients vanish; the series is",
        "// the entire continuation of the ratio, so it is valid on all of p in [0, 1].",
        "// Generated by tests/oracle/generate_fixtures.py.",
        "static constexpr int kPsiDegree = %d;" % DEG,
        "static constexpr double kPsiTaylor[kPsiDegree + 1] = {",
    ]
    for n, c in enumerate(coeffs):
        v = "0.0" if n % 2 == 1 else fmt(c)
        lines.append("    %s,  // u^%d" % (v, n))
    lines.append("};")
    with open(os.path.join(SRC, "psi_series.inc"), "w") as f:
        f.write("\n".join(lines) + "\n")


def write_gl16_inc():
    nodes, weights = gauss_legendre_16()
    lines = [
        "// 16-point Gauss-Legendre rule on [-1, 1]: positive abscissas and weights",
        "// (the rule is symmetric).  Exact for polynomials of degree <= 31.",
        "// Generated by tests/oracle/generate_fixtures.py.",
        "static constexpr double kGl16Nodes[8] = {",
    ]
    for x in nodes:
        lines.append("    %s," % fmt(x))
    lines.append("};")
    lines.append("static constexpr double kGl16Weights[8] = {")
    for w in weights:
        lines.append("    %s," % fmt(w))
    lines.append("};")
    with open(os.path.join(SRC, "gauss_legendre_16.inc"), "w") as f:
        f.write("\n".join(lines) + "\n")


def write_zeros():
    path = os.path.join(FIXTURES, "zeta_zeros_50.txt")
    with open(path, "w") as f:
        f.write("# First 50 ordinates gamma_n of the nontrivial zeros of zeta on the\n")
        f.write("# critical line, 15 significant digits, one ordinate per line.\n")
        f.write("# Generated by tests/oracle/generate_fixtures.py (mpmath.zetazero).\n")
        for n in range(1, 51):
            g = mp.zetazero(n).imag
            f.write(mp.nstr(g, 15) + "\n")


def write_z_oracle():
    rng = random.Random(20260810)
    ts = sorted(10.0 ** 4 + (10.0 ** 5 - 10.0 ** 4) * rng.random() for _ in range(100))
    path = os.path.join(FIXTURES, "z_oracle.txt")
    with open(path, "w") as f:
        f.write("# 100 reference values of the Hardy Z function: columns t, Z(t).\n")
        f.write("# t: 100 draws from random.Random(20260810) mapped to [1e4, 1e5],\n")
        f.write("# printed with 17 significant digits (exact float64 round trip).\n")
        f.write("# Z(t): mpmath.siegelz at 30 digits working precision, printed to 20.\n")
        f.write("# Generated by tests/oracle/generate_fixtures.py.\n")
        for t in ts:
            z = mp.siegelz(t)
            f.write("%s %s\n" % (repr(t), mp.nstr(z, 20)))


def write_constants():
    two_pi = 2 * mp.pi

    def theta1(t):
        t = mp.mpf(t)
        return t / 2 * mp.log(t / two_pi) - t / 2 - mp.pi / 8

    c = [
        ("kFirstZero", mp.zetazero(1).imag, "first zero ordinate"),
        ("kGramPoint0", mp.grampoint(0), "Gram point g_0: theta(g_0) = 0"),
        ("kTheta1At1e5", theta1(10 ** 5), "theta_1(1e5), closed form at 40 digits"),
        ("kTheta1At1e7", theta1(10 ** 7), "theta_1(1e7), closed form at 40 digits"),
        ("kThetaAt1e6", mp.siegeltheta(10 ** 6), "Riemann-Siegel theta(1e6)"),
        ("kThetaAt17_8", mp.siegeltheta(mp.mpf("17.8455995405330")),
         "theta at the Gram-point fixture value"),
        ("kLi2", mp.li(2), "li(2)"),
        ("kLi1e6", mp.li(10 ** 6), "li(1e6)"),
        ("kLi1e8", mp.li(10 ** 8), "li(1e8)"),
        ("kLi1e10", mp.li(10 ** 10), "li(1e10)"),
        ("kLi1e20", mp.li(10 ** 20), "li(1e20)"),
        ("kEulerGamma", mp.euler, "Euler-Mascheroni constant"),
    ]
    lines = [
        "// Frozen high-precision reference scalars for the test suite.",
        "// Generated by tests/oracle/generate_fixtures.py; do not edit by hand.",
        "#pragma once",
        "",
        "namespace oracle {",
        "",
    ]
    for name, val, comment in c:
        lines.append("// %s" % comment)
        lines.append("inline constexpr double %s = %s;" % (name, fmt(val)))
        lines.append("")
    lines.append("}  // namespace oracle")
    with open(os.path.join(HERE, "..", "oracle_constants.hpp"), "w") as f:
        f.write("\n".join(lines) + "\n")


def main():
    mp.mp.dps = 40
    os.makedirs(FIXTURES, exist_ok=True)
    write_psi_inc()
    write_gl16_inc()
    write_constants()
    mp.mp.dps = 30
    write_zeros()
    write_z_oracle()
    print("fixtures regenerated")


if __name__ == "__main__":
    main()
