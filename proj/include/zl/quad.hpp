/*
 * quad.hpp — deterministic composite quadrature over a DisjointSet.
 *
 * Fixed-order Gauss-Legendre (16 nodes) per panel.  Each component interval
 * is seeded with panels no wider than spacing_estimate(T)/8; a panel is
 * accepted when the two-level difference |GL16(halves) - GL16(panel)| drops
 * below tol * width / measure(set) plus a noise floor of 3e-7 of the panel's
 * |f| mass (the 64-bit evaluation noise of the Z triple products; without
 * the floor a tight tol chases noise forever), otherwise it is halved
 * (depth cap 20).  err_estimate reports the accepted differences, so the
 * achieved accuracy is visible whichever bound was active.
 *
 * Panels are independent work items and may be evaluated by any number of
 * threads; the final combination is a pairwise tree sum over panels in fixed
 * interval order, so the result is bit-identical for every thread count.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "zl/sets.hpp"

namespace zl {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  // sum of accepted two-level differences
    std::int64_t panels = 0;    // leaf panels contributing to value
    std::int64_t evals = 0;     // total integrand evaluations
};

// Integrate f over s with absolute tolerance tol (> 0).  Throws
// convergence_error when a panel still disagrees after 20 halvings and
// std::domain_error if f produces a non-finite value.
QuadResult integrate(const std::function<double(double)> &f, const DisjointSet &s,
                     double tol, int threads = 1);

// Split s into (s_plus, s_minus): the subsets where g > 0 resp. g < 0.
// Sign changes are located by scanning at step spacing_estimate(T)/64 and
// bisecting each bracketed crossing to 1e-9 in t.  The roots themselves
// (measure zero) are dropped.
std::pair<DisjointSet, DisjointSet> sign_partition(const DisjointSet &s,
                                                   const std::function<double(double)> &g,
                                                   int threads = 1);

}  // namespace zl
