#include "zl/nodes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zl/errors.hpp"
#include "zl/rs_zeta.hpp"

namespace zl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kMaxIter = 64;

// Invert theta1 on (2pi, inf): find k with theta1(k) = target.
// Seed: with x = k/2pi the equation reads x (ln x - 1) = B,
// B = (2 target + pi/4) / 2pi.  The fixed point x <- B / (ln x - 1) is
// contractive for x > e^2, and small targets start inside the bracket
// anyway; a handful of iterations lands close enough for Newton.
double invert_theta1(double target) {
    const double B = (2.0 * target + kPi / 4.0) / kTwoPi;
    double x = std::exp(2.0) + 1.0;
    if (B > x * (std::log(x) - 1.0)) {
        for (int i = 0; i < 8; ++i) x = B / (std::log(x) - 1.0);
    }
    double k = kTwoPi * std::max(x, 1.0 + 1e-9);

    // establish a bracket [lo, hi] with theta1(lo) <= target <= theta1(hi)
    double lo = kTwoPi * (1.0 + 1e-12);  // theta1 there is ~ -pi - pi/8 < any target
    double hi = std::max(k, kTwoPi * std::exp(1.0));
    while (theta1(hi) < target) hi *= 2.0;

    if (k <= lo || k >= hi) k = 0.5 * (lo + hi);
    double f = theta1(k) - target;
    for (int it = 0; it < kMaxIter; ++it) {
        if (std::abs(f) < kNodeResidualTol) return k;
        if (f > 0.0) hi = k; else lo = k;
        const double step = f / theta1_deriv(k);
        double next = k - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
        k = next;
        f = theta1(k) - target;
    }
    if (std::abs(f) < kNodeResidualTol) return k;
    throw convergence_error("invert_theta1: residual " + std::to_string(f) +
                            " not within tolerance at target " + std::to_string(target));
}

}  // namespace

double node(const NodeQuery &q) {
    if (q.nu < 1) throw std::domain_error("node: nu must be >= 1");
    if (!(q.tau >= -kPi && q.tau <= kPi))
        throw std::domain_error("node: tau must lie in [-pi, pi]");
    const double target = (kPi * static_cast<double>(q.nu) + q.tau) / 3.0;
    return invert_theta1(target);
}

std::vector<std::int64_t> nodes_in_window(double T, double U, Parity parity) {
    if (!(T >= kZetaTMin)) throw std::domain_error("nodes_in_window: T below supported range");
    if (!(U > 0.0)) throw std::domain_error("nodes_in_window: U must be > 0");

    // k_nu(0) in [T, T+U]  <=>  3 theta1(T)/pi <= nu <= 3 theta1(T+U)/pi
    auto lo = static_cast<std::int64_t>(std::ceil(3.0 * theta1(T) / kPi));
    auto hi = static_cast<std::int64_t>(std::floor(3.0 * theta1(T + U) / kPi));
    lo = std::max<std::int64_t>(lo, 1);

    // float fuzz at the edges: verify against the window and nudge
    const auto inside = [&](std::int64_t nu) {
        const double k = node({nu, 0.0});
        return k >= T && k <= T + U;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (lo > 1 && inside(lo - 1)) --lo;
    while (hi >= lo && !inside(hi)) --hi;
    while (hi >= lo && inside(hi + 1)) ++hi;

    std::vector<std::int64_t> out;
    if (hi < lo) return out;
    const std::int64_t want = (parity == Parity::Even) ? 0 : 1;
    std::int64_t nu = lo + ((lo % 2 + 2) % 2 == want ? 0 : 1);
    for (; nu <= hi; nu += 2) out.push_back(nu);
    return out;
}

double spacing_estimate(double t) {
    const double d = theta1_deriv(t);
    if (!(d > 0.0)) throw std::domain_error("spacing_estimate: theta1'(t) <= 0");
    return kPi / (3.0 * d);
}

}  // namespace zl
