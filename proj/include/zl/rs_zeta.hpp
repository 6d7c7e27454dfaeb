/*
 * rs_zeta.hpp — phase functions and the Hardy Z function on the critical line.
 *
 * Implemented quantities:
 *
 *   theta1(t)      = (t/2) ln(t/2pi) - t/2 - pi/8
 *                    (truncated phase; strictly increasing for t > 2pi)
 *   theta_rs(t)    = theta1(t) + 1/(48t) + 7/(5760 t^3)
 *                    (Riemann-Siegel phase with the two asymptotic corrections)
 *   z(t)           = 2 sum_{n<=N} n^{-1/2} cos(theta_rs(t) - t ln n)
 *                    + (-1)^{N-1} a^{-1/4} sum_{j<=4} C_j(p) a^{-j/2},
 *                    a = t/2pi, N = floor(sqrt(a)), p = frac(sqrt(a))
 *
 * The correction coefficients C_0..C_4 are derivative combinations of the
 * single base function Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p),
 * evaluated through its Taylor series about p = 1/2 (src/psi_series.inc),
 * which is the entire continuation of the ratio and therefore uniformly
 * accurate across the removable singularities at p = 1/4, 3/4.
 *
 * Accuracy: the returned err_bound covers the truncation of the C_5+ terms
 * plus 64-bit phase-reduction noise.  Measured against a high-precision
 * oracle the absolute error stays below 3e-6 for t >= 14 and below 3e-10
 * for t in [1e4, 1e5].  All phase arithmetic is plain 64-bit; this caps the
 * useful range at t <= ~1e7 (reduction noise ~1e-8 there).
 */
#pragma once

#include <cstdint>

namespace zl {

// Lower end of the supported evaluation range for z / theta_rs.  Below this
// the asymptotic remainder model is no longer trustworthy.
inline constexpr double kZetaTMin = 10.0;

// A Z(t) value with an absolute truncation/rounding error estimate.
struct ZEval {
    double value = 0.0;
    double err_bound = 0.0;  // >= 0 always
};

// Shifts (rho1, rho2, rho3) plus the scale P = sqrt(T / 2pi) they are
// measured against.  Built with make_shift_triple.
struct ShiftTriple {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double rho3 = 0.0;
    double P = 1.0;

    double sum() const { return rho1 + rho2 + rho3; }
    double min_shift() const;
    double max_abs() const;
};

// P is derived from T; throws std::domain_error for T <= 0.
ShiftTriple make_shift_triple(double rho1, double rho2, double rho3, double T);

// theta1(t) = (t/2) ln(t/2pi) - t/2 - pi/8; domain t > 0.
double theta1(double t);

// d/dt theta1 = (1/2) ln(t/2pi); domain t > 0.
double theta1_deriv(double t);

// Riemann-Siegel phase theta(t) = theta1(t) + 1/(48t) + 7/(5760 t^3);
// domain t >= kZetaTMin.
double theta_rs(double t);

// Hardy Z via the Riemann-Siegel formula with corrections C_0..C_4;
// domain t >= kZetaTMin.
ZEval z(double t);

// z(t + rho1) * z(t + rho2) * z(t + rho3).  Symmetric in the shifts.
double z_triple(double t, const ShiftTriple &shifts);

}  // namespace zl
