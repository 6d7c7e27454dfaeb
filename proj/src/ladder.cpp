#include "zl/ladder.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "zl/errors.hpp"

namespace zl {

namespace {

// ---------------------------------------------------------------------------
// sieve: odd-only bitmap with per-block cumulative popcounts
// ---------------------------------------------------------------------------

constexpr std::uint64_t kDefaultSieveBound = 100000000;  // 1e8
constexpr std::size_t kWordsPerBlock = 64;               // 4096 odd numbers per block

struct Sieve {
    std::uint64_t bound;
    std::vector<std::uint64_t> bits;        // bit i set <=> 2i + 3 is prime
    std::vector<std::uint64_t> block_cum;   // set bits in words before block b

    explicit Sieve(std::uint64_t n) : bound(n) {
        const std::uint64_t odds = (n >= 3) ? (n - 3) / 2 + 1 : 0;
        bits.assign((odds + 63) / 64, ~std::uint64_t{0});
        if (odds % 64 != 0 && !bits.empty())
            bits.back() = (~std::uint64_t{0}) >> (64 - odds % 64);
        for (std::uint64_t p = 3; p * p <= n; p += 2) {
            const std::uint64_t i = (p - 3) / 2;
            if (!(bits[i / 64] >> (i % 64) & 1)) continue;
            for (std::uint64_t m = p * p; m <= n; m += 2 * p) {
                const std::uint64_t j = (m - 3) / 2;
                bits[j / 64] &= ~(std::uint64_t{1} << (j % 64));
            }
        }
        block_cum.assign(bits.size() / kWordsPerBlock + 1, 0);
        std::uint64_t cum = 0;
        for (std::size_t w = 0; w < bits.size(); ++w) {
            if (w % kWordsPerBlock == 0) block_cum[w / kWordsPerBlock] = cum;
            cum += static_cast<std::uint64_t>(std::popcount(bits[w]));
        }
        block_cum.back() = cum;
    }

    // number of primes <= t (t <= bound)
    std::uint64_t count(double t) const {
        if (t < 2.0) return 0;
        if (t < 3.0) return 1;
        const auto v = static_cast<std::uint64_t>(t);
        const std::uint64_t last = (v - 3) / 2;  // largest odd index to include
        std::uint64_t cnt = 1;                   // the prime 2
        const std::size_t word = static_cast<std::size_t>(last / 64);
        cnt += block_cum[word / kWordsPerBlock];
        for (std::size_t w = (word / kWordsPerBlock) * kWordsPerBlock; w < word; ++w)
            cnt += static_cast<std::uint64_t>(std::popcount(bits[w]));
        const std::uint64_t mask = (~std::uint64_t{0}) >> (63 - last % 64);
        cnt += static_cast<std::uint64_t>(std::popcount(bits[word] & mask));
        return cnt;
    }
};

std::mutex g_sieve_mu;
std::uint64_t g_bound = 0;  // 0 = not yet resolved
std::shared_ptr<const Sieve> g_sieve;

std::uint64_t resolve_default_bound() {
    if (const char *env = std::getenv("ZL_SIEVE_BOUND")) {
        char *end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v >= 1e4 && v <= 4e9) return static_cast<std::uint64_t>(v);
    }
    return kDefaultSieveBound;
}

std::shared_ptr<const Sieve> sieve() {
    std::lock_guard<std::mutex> lock(g_sieve_mu);
    if (g_bound == 0) g_bound = resolve_default_bound();
    if (!g_sieve || g_sieve->bound != g_bound)
        g_sieve = std::make_shared<const Sieve>(g_bound);
    return g_sieve;
}

// ---------------------------------------------------------------------------
// logarithmic integral
// ---------------------------------------------------------------------------

// Ei(u) for u > 0: convergent series below 50, asymptotic series above.
double exp_integral(double u) {
    if (u < 50.0) {
        // Ei(u) = gamma + ln u + sum_{k>=1} u^k / (k k!)  (all terms positive)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k < 400; ++k) {
            term *= u / k;
            const double add = term / k;
            sum += add;
            if (add < sum * 1e-18) break;
        }
        return kEulerGamma + std::log(u) + sum;
    }
    // Ei(u) ~ e^u / u * sum_k k! / u^k, truncated at the smallest term
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * k / u;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return std::exp(u) / u * sum;
}

const double kLi2 = exp_integral(std::log(2.0));  // li(2) = 1.04516378...

}  // namespace

std::uint64_t sieve_bound() { return sieve()->bound; }

void set_sieve_bound(std::uint64_t bound) {
    if (bound < 100) throw std::domain_error("set_sieve_bound: bound too small");
    std::lock_guard<std::mutex> lock(g_sieve_mu);
    g_bound = bound;
    g_sieve.reset();
}

double log_integral(double x) {
    if (!(x >= 2.0)) throw std::domain_error("log_integral: x must be >= 2");
    return exp_integral(std::log(x));
}

double prime_pi(double t) {
    if (!(t >= 2.0)) throw std::domain_error("prime_pi: t must be >= 2");
    const auto sv = sieve();
    if (t <= static_cast<double>(sv->bound)) return static_cast<double>(sv->count(t));
    return log_integral(t) - kLi2;
}

double phi_half(double t) { return t - (1.0 - kEulerGamma) * prime_pi(t); }

double ladder_image(double T) {
    if (!(T >= 2.0)) throw std::domain_error("ladder_image: T must be >= 2");
    const double tol = 1e-6 * T;

    // bracket: phi_half(T) < T always; grow the upper end past the root
    double lo = T;
    double gap = std::max(64.0, (1.0 - kEulerGamma) * T / std::max(std::log(T), 2.0));
    double hi = T + gap;
    while (phi_half(hi) < T) {
        gap *= 2.0;
        hi = T + gap;
    }

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 128; ++it) {
        const double f = phi_half(x) - T;
        if (std::abs(f) < tol) return x;
        if (f > 0.0) hi = x; else lo = x;
        // Newton with the smooth density surrogate phi_half' ~ 1 - (1-c)/ln x
        const double deriv = 1.0 - (1.0 - kEulerGamma) / std::log(x);
        double next = x - f / deriv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;  // float resolution reached
        x = next;
    }
    if (std::abs(phi_half(x) - T) < tol) return x;
    throw convergence_error("ladder_image: no convergence at T = " + std::to_string(T));
}

DisjointSet map_set(const DisjointSet &s) {
    DisjointSet img;
    img.family = s.family;
    img.a1 = s.a1;
    img.a2 = s.a2;
    img.indices = s.indices;
    img.T = ladder_image(s.T);
    img.U = ladder_image(s.T + s.U) - img.T;
    img.intervals.reserve(s.intervals.size());
    for (const Interval &iv : s.intervals)
        img.intervals.push_back({ladder_image(iv.lo), ladder_image(iv.hi)});
    return img;
}

LadderReport disjointness_report(double T, double U, double eps) {
    if (!(T >= 2.0 && U > 0.0 && eps > 0.0))
        throw std::domain_error("disjointness_report: T >= 2, U > 0, eps > 0 required");

    LadderReport r;
    r.T = T;
    r.U = U;
    r.eps = eps;
    r.T_ring = ladder_image(T);
    r.TU_ring = ladder_image(T + U);
    r.d = r.T_ring - (T + U);
    r.d_predicted = (1.0 - kEulerGamma) * prime_pi(r.T_ring) - U;
    r.disjoint = r.d > 0.0;
    r.gap_bound = (1.0 - kEulerGamma - 2.0 * eps) * T / std::log(T);
    r.gap_exceeds_bound = r.d > r.gap_bound;
    r.regime_reached = r.disjoint && r.gap_exceeds_bound;

    if (!r.disjoint)
        r.notes.push_back("asymptotic regime unreached: the reverse image of T "
                          "falls inside [T, T+U] (d <= 0)");
    else if (!r.gap_exceeds_bound)
        r.notes.push_back("segments disjoint but the gap is below "
                          "(1 - c - 2 eps) T / ln T");
    return r;
}

}  // namespace zl
