/*
 * ladder.hpp — prime-counting surrogate of the ladder correspondence.
 *
 * The increasing map phi satisfies t - phi(t)/2 ~ (1-c) pi(t) with c the
 * Euler-Mascheroni constant; here that asymptotic relation is promoted to a
 * defining equality for the surrogate
 *
 *     phi_half(t) = t - (1 - c) * prime_pi(t),
 *
 * and ladder_image(T) inverts it: phi_half(ladder_image(T)) = T.
 *
 * prime_pi is exact (bit sieve) up to the configurable sieve bound and the
 * offset logarithmic integral li(t) - li(2) above it.  The li surrogate is
 * accurate to ~1e-14 relative as an integral, but li(t) - pi(t) itself is
 * a genuine number-theoretic gap: 129.5 at t = 1e6 (1.65e-3 relative),
 * 754 at t = 1e8 (1.31e-4 relative).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zl/sets.hpp"

namespace zl {

inline constexpr double kEulerGamma = 0.57721566490153286;

// Sieve ceiling: exact prime counts below, li above.  The default is 1e8 and
// can be overridden by the environment variable ZL_SIEVE_BOUND (read once at
// first use) or by set_sieve_bound before the first prime_pi call.
std::uint64_t sieve_bound();
void set_sieve_bound(std::uint64_t bound);

// Offset logarithmic integral li(x), principal value, for x >= 2.
// Convergent exponential-integral series below argument 50, asymptotic
// series above; relative accuracy ~1e-14.
double log_integral(double x);

// pi(t): exact count for t <= sieve_bound(), li(t) - li(2) above.
// Throws std::domain_error for t < 2.
double prime_pi(double t);

// phi_half(t) = t - (1 - c) * prime_pi(t).
double phi_half(double t);

// The reverse image: T_ring > T with |phi_half(T_ring) - T| < 1e-6 * T.
double ladder_image(double T);

// Apply ladder_image to every interval endpoint; ordering and disjointness
// are preserved (the map is increasing).
DisjointSet map_set(const DisjointSet &s);

struct LadderReport {
    double T = 0.0;
    double U = 0.0;
    double eps = 0.0;
    double T_ring = 0.0;       // ladder_image(T)
    double TU_ring = 0.0;      // ladder_image(T + U)
    double d = 0.0;            // T_ring - (T + U); positive iff the segments are disjoint
    double d_predicted = 0.0;  // (1 - c) * prime_pi(T_ring) - U
    bool disjoint = false;
    double gap_bound = 0.0;    // (1 - c - 2 eps) * T / ln T
    bool gap_exceeds_bound = false;
    bool regime_reached = false;  // disjoint and gap above the bound
    std::vector<std::string> notes;
};

// Quantifies the separation of [T, T+U] from its reverse image
// [T_ring, (T+U)_ring].  At desk-scale T the separation is typically
// negative (the asymptotic regime is unreached); the report says so rather
// than failing.
LadderReport disjointness_report(double T, double U, double eps);

}  // namespace zl
