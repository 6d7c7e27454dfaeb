/*
 * sets.hpp — the disconnected sets G5 / G6 as explicit interval lists.
 *
 * G5(x1, x2, T, U) is the union of [k_nu(x1), k_nu(x2)] over the even
 * indices nu with T <= k_nu(0) <= T + U; G6 is the odd-index analogue.
 * Component intervals are strictly disjoint: consecutive same-parity nodes
 * are 2pi/3 apart in theta1 while an interval spans at most pi/3.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zl/rs_zeta.hpp"

namespace zl {

enum class SetFamily { G5, G6 };

const char *family_name(SetFamily f);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// Sorted, strictly disjoint closed intervals plus the parameters that
// produced them.  Immutable after construction.
struct DisjointSet {
    std::vector<Interval> intervals;
    std::vector<std::int64_t> indices;  // node index per interval; empty for derived sets
    SetFamily family = SetFamily::G5;
    double T = 0.0;
    double U = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
};

// Window / shift diagnostics against the admissible ranges
// T^(13/16 + 2 eps) <= U <= T^(7/8 + eps/2), |rho_i| <= T^(1/48 - eps).
// Violations are warnings: runs outside the asymptotic window stay legal,
// the deviation is simply reported.
struct WindowReport {
    double T = 0.0;
    double U = 0.0;
    double eps = 0.0;
    double u_min = 0.0;          // T^(13/16 + 2 eps)
    double u_max = 0.0;          // T^(7/8 + eps/2)
    bool u_in_window = false;
    double shift_bound = 0.0;    // T^(1/48 - eps)
    bool shifts_in_window = false;
    double P = 0.0;              // sqrt(T / 2pi)
    std::vector<std::string> warnings;
};

// Build G5/G6 for endpoints -pi/2 <= a1 < a2 <= pi/2.  Every interval is
// [k_nu(a1), k_nu(a2)] for a window index nu of the family's parity.
// Throws std::domain_error on endpoint violations.
DisjointSet build_set(SetFamily family, double a1, double a2, double T, double U);

// Total length sum of the intervals.
double measure(const DisjointSet &s);

WindowReport validate_window(double T, double U, double eps, const ShiftTriple &shifts);

}  // namespace zl
