#include "zl/sets.hpp"

#include <cmath>
#include <stdexcept>

#include "zl/nodes.hpp"

namespace zl {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

const char *family_name(SetFamily f) { return f == SetFamily::G5 ? "G5" : "G6"; }

DisjointSet build_set(SetFamily family, double a1, double a2, double T, double U) {
    if (!(a1 >= -kPi / 2.0 && a2 <= kPi / 2.0))
        throw std::domain_error("build_set: endpoints must lie in [-pi/2, pi/2]");
    if (!(a1 < a2)) throw std::domain_error("build_set: a1 < a2 required");

    DisjointSet s;
    s.family = family;
    s.T = T;
    s.U = U;
    s.a1 = a1;
    s.a2 = a2;
    const Parity parity = (family == SetFamily::G5) ? Parity::Even : Parity::Odd;
    s.indices = nodes_in_window(T, U, parity);
    s.intervals.reserve(s.indices.size());
    for (const std::int64_t nu : s.indices)
        s.intervals.push_back({node({nu, a1}), node({nu, a2})});
    return s;
}

double measure(const DisjointSet &s) {
    double sum = 0.0;
    for (const Interval &iv : s.intervals) sum += iv.length();
    return sum;
}

WindowReport validate_window(double T, double U, double eps, const ShiftTriple &shifts) {
    if (!(T > 0.0 && U > 0.0 && eps > 0.0))
        throw std::domain_error("validate_window: T, U, eps must be > 0");

    WindowReport r;
    r.T = T;
    r.U = U;
    r.eps = eps;
    r.u_min = std::pow(T, 13.0 / 16.0 + 2.0 * eps);
    r.u_max = std::pow(T, 7.0 / 8.0 + eps / 2.0);
    r.u_in_window = (U >= r.u_min && U <= r.u_max);
    r.shift_bound = std::pow(T, 1.0 / 48.0 - eps);
    r.shifts_in_window = shifts.max_abs() <= r.shift_bound;
    r.P = std::sqrt(T / kTwoPi);

    if (U < r.u_min)
        r.warnings.push_back("U below asymptotic window: U < T^(13/16 + 2*eps)");
    else if (U > r.u_max)
        r.warnings.push_back("U above asymptotic window: U > T^(7/8 + eps/2)");
    if (!r.shifts_in_window)
        r.warnings.push_back("shift exceeds T^(1/48 - eps)");
    return r;
}

}  // namespace zl
