#include "zl/quad.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "zl/errors.hpp"
#include "zl/nodes.hpp"

namespace zl {

namespace {

#include "gauss_legendre_16.inc"

constexpr int kMaxDepth = 20;

// Per-panel noise floor, relative to the panel's |f| mass.  Triple products
// of Z carry ~1e-9 absolute evaluation noise from 64-bit phase reduction
// (relative noise 3*delta/|Z|, largest where |Z| is smallest); once the
// two-level difference is down at that level further halving can never
// converge, the difference and the width-proportional threshold both scale
// linearly with width.  Refinement therefore stops when the difference is
// below this fraction of the local |f| integral.  Genuinely unresolved
// panels sit orders of magnitude above it.
constexpr double kPanelNoiseFloor = 3e-7;

using Fn = std::function<double(double)>;

struct GlEval {
    double value = 0.0;
    double mass = 0.0;  // integral of |f|, same rule
};

GlEval gl16(const Fn &f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    double mass = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kGl16Nodes[i];
        const double pair = f(c - dx) + f(c + dx);
        sum += kGl16Weights[i] * pair;
        mass += kGl16Weights[i] * std::abs(pair);
    }
    return {sum * h, mass * h};
}

struct PanelResult {
    double value = 0.0;
    double err = 0.0;
    std::int64_t leaves = 0;
    std::int64_t evals = 0;
};

// Two-level refinement: parent_val is GL16 over [a, b]; children are
// evaluated, and the pair is either accepted or both halves recurse.
PanelResult refine(const Fn &f, double a, double b, double parent_val,
                   double tol_per_width, int depth) {
    if (depth > kMaxDepth)
        throw convergence_error("integrate: panel [" + std::to_string(a) + ", " +
                                std::to_string(b) + "] exceeded " +
                                std::to_string(kMaxDepth) + " halvings");
    const double mid = 0.5 * (a + b);
    const GlEval left = gl16(f, a, mid);
    const GlEval right = gl16(f, mid, b);
    const double two_level = left.value + right.value;
    if (!std::isfinite(two_level))
        throw std::domain_error("integrate: non-finite integrand value in [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]");
    const double diff = std::abs(two_level - parent_val);
    if (diff < tol_per_width * (b - a) + kPanelNoiseFloor * (left.mass + right.mass)) {
        PanelResult r;
        r.value = two_level;
        r.err = diff;
        r.leaves = 2;
        r.evals = 32;
        return r;
    }
    PanelResult l = refine(f, a, mid, left.value, tol_per_width, depth + 1);
    PanelResult rr = refine(f, mid, b, right.value, tol_per_width, depth + 1);
    PanelResult r;
    r.value = l.value + rr.value;
    r.err = l.err + rr.err;
    r.leaves = l.leaves + rr.leaves;
    r.evals = 32 + l.evals + rr.evals;
    return r;
}

// Pairwise (tree) sum over [lo, hi) in fixed order.
double pairwise_sum(const std::vector<double> &v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Run job(i) for i in [0, n) on `threads` workers; each index's work is
// independent and writes only its own slot, so scheduling cannot change
// the results.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)> &job) {
    threads = std::max(1, threads);
    if (threads == 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    std::atomic<std::int64_t> next{0};
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::int64_t i = next.fetch_add(1);
                if (i >= n) return;
                job(i);
            }
        });
    for (auto &th : pool) th.join();
}

}  // namespace

QuadResult integrate(const Fn &f, const DisjointSet &s, double tol, int threads) {
    if (!(tol > 0.0)) throw std::domain_error("integrate: tol must be > 0");
    QuadResult out;
    if (s.intervals.empty()) return out;

    const double total = measure(s);
    if (!(total > 0.0)) return out;
    const double seed_width = spacing_estimate(s.T) / 8.0;
    const double tol_per_width = tol / total;

    // top-level panels in fixed interval order
    struct Panel {
        double a, b;
    };
    std::vector<Panel> panels;
    for (const Interval &iv : s.intervals) {
        const auto m = static_cast<std::int64_t>(std::ceil(iv.length() / seed_width));
        const std::int64_t count = std::max<std::int64_t>(m, 1);
        const double w = iv.length() / static_cast<double>(count);
        for (std::int64_t j = 0; j < count; ++j) {
            const double a = iv.lo + static_cast<double>(j) * w;
            const double b = (j + 1 == count) ? iv.hi : iv.lo + static_cast<double>(j + 1) * w;
            panels.push_back({a, b});
        }
    }

    std::vector<PanelResult> results(panels.size());
    std::exception_ptr failure;
    std::mutex failure_mu;
    parallel_for(static_cast<std::int64_t>(panels.size()), threads, [&](std::int64_t i) {
        try {
            const Panel &p = panels[static_cast<std::size_t>(i)];
            const double parent = gl16(f, p.a, p.b).value;
            PanelResult r = refine(f, p.a, p.b, parent, tol_per_width, 1);
            r.evals += 16;
            results[static_cast<std::size_t>(i)] = r;
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    std::vector<double> values(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) values[i] = results[i].value;
    out.value = pairwise_sum(values, 0, values.size());
    for (const PanelResult &r : results) {
        out.err_estimate += r.err;
        out.panels += r.leaves;
        out.evals += r.evals;
    }
    return out;
}

namespace {

// Bisect a sign change of f inside [a, b] down to width 1e-9.
double bisect_root(const Fn &f, double a, double b, double fa, double fb) {
    if (!(fa * fb < 0.0))
        throw convergence_error("sign_partition: invalid bisection bracket [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]");
    while (b - a > 1e-9) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // hit float resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::pair<DisjointSet, DisjointSet> sign_partition(const DisjointSet &s, const Fn &g,
                                                   int threads) {
    DisjointSet plus, minus;
    for (DisjointSet *p : {&plus, &minus}) {
        p->family = s.family;
        p->T = s.T;
        p->U = s.U;
        p->a1 = s.a1;
        p->a2 = s.a2;
    }
    if (s.intervals.empty()) return {plus, minus};

    const double step = spacing_estimate(s.T) / 64.0;

    struct Piece {
        Interval iv;
        std::int64_t index;
        bool positive;
    };
    std::vector<std::vector<Piece>> per_interval(s.intervals.size());

    parallel_for(static_cast<std::int64_t>(s.intervals.size()), threads, [&](std::int64_t ii) {
        const Interval &iv = s.intervals[static_cast<std::size_t>(ii)];
        const std::int64_t idx =
            s.indices.empty() ? -1 : s.indices[static_cast<std::size_t>(ii)];
        const auto n = std::max<std::int64_t>(
            1, static_cast<std::int64_t>(std::ceil(iv.length() / step)));
        const double h = iv.length() / static_cast<double>(n);

        // sample values; nudge exact zeros off the grid point
        const auto sample = [&](double x) {
            double v = g(x);
            if (v == 0.0) v = g(x + 1e-3 * h);
            return v;
        };

        std::vector<double> cuts{iv.lo};
        double xprev = iv.lo;
        double fprev = sample(iv.lo);
        for (std::int64_t j = 1; j <= n; ++j) {
            const double x = (j == n) ? iv.hi : iv.lo + static_cast<double>(j) * h;
            const double fx = sample(x);
            if ((fx > 0.0) != (fprev > 0.0))
                cuts.push_back(bisect_root(g, xprev, x, fprev, fx));
            xprev = x;
            fprev = fx;
        }
        cuts.push_back(iv.hi);

        std::vector<Piece> pieces;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            if (!(cuts[j + 1] > cuts[j])) continue;
            const double mid = 0.5 * (cuts[j] + cuts[j + 1]);
            pieces.push_back({{cuts[j], cuts[j + 1]}, idx, g(mid) > 0.0});
        }
        per_interval[static_cast<std::size_t>(ii)] = std::move(pieces);
    });

    for (const auto &pieces : per_interval)
        for (const Piece &p : pieces) {
            DisjointSet &dst = p.positive ? plus : minus;
            dst.intervals.push_back(p.iv);
            if (p.index >= 0) dst.indices.push_back(p.index);
        }
    return {plus, minus};
}

}  // namespace zl
