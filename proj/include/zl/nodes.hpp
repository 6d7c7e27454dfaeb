/*
 * nodes.hpp — inversion of the truncated phase theta1.
 *
 * The node k_nu(tau) is the unique solution k > 2pi of
 *
 *     theta1(k) = (pi nu + tau) / 3,   nu >= 1,  tau in [-pi, pi].
 *
 * theta1 is strictly increasing on (2pi, inf), so a bracketed Newton
 * iteration converges unconditionally; the solver tolerance is on the
 * theta1 residual (1e-9), which is what downstream interval geometry
 * depends on, not on k itself.
 */
#pragma once

#include <cstdint>
#include <vector>

namespace zl {

enum class Parity { Even, Odd };

struct NodeQuery {
    std::int64_t nu = 1;   // index, >= 1
    double tau = 0.0;      // in [-pi, pi]; out-of-range is rejected, not wrapped
};

// Residual tolerance of the node solver: |theta1(k) - (pi nu + tau)/3|.
inline constexpr double kNodeResidualTol = 1e-9;

// Solve theta1(k) = (pi nu + tau)/3.  Throws std::domain_error for invalid
// queries and convergence_error if the residual tolerance is not met within
// the iteration cap (which signals a solver bug).
double node(const NodeQuery &q);

// All indices nu of the given parity with T <= k_nu(0) <= T + U, increasing.
// Boundary indices are verified directly against the window.
std::vector<std::int64_t> nodes_in_window(double T, double U, Parity parity);

// Mean spacing of consecutive nodes near t: pi / (3 theta1'(t)).
// Throws std::domain_error when theta1'(t) <= 0.
double spacing_estimate(double t);

}  // namespace zl
