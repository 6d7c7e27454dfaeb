#include "zl/experiments.hpp"

#include "zl/nodes.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace zl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::int64_t degeneracy_scan_limit(double T, double eps) {
    const double L = std::ceil(std::pow(T, 1.0 / 48.0 - eps) * std::log(T));
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(L));
}

void check_phase(double a1, double a2, const ShiftTriple &shifts, double T, double eps,
                 const char *label, std::vector<std::string> &out) {
    if (a1 == a2) {
        out.push_back(std::string(label) + ": endpoints coincide (degenerate set)");
        return;
    }
    const double phase = a1 + a2 + 2.0 * shifts.sum() * std::log(shifts.P);
    // nearest odd multiple (2k+1) pi of the phase
    const double k_real = 0.5 * (phase / kPi - 1.0);
    const auto k = static_cast<std::int64_t>(std::llround(k_real));
    const std::int64_t L = degeneracy_scan_limit(T, eps);
    if (std::llabs(k) > L) return;
    const double dist = std::abs(phase - (2.0 * static_cast<double>(k) + 1.0) * kPi);
    if (dist < 0.1)
        out.push_back(std::string(label) + ": phase within 0.1 rad of an odd multiple of pi"
                      " (main term degenerates); distance " + std::to_string(dist));
}

void validate_shift_scale(const ShiftTriple &shifts, double T) {
    const double expect = T / kTwoPi;
    if (!(shifts.P > 0.0) || std::abs(shifts.P * shifts.P - expect) > 1e-12 * expect)
        throw std::invalid_argument("shifts.P inconsistent with T (use make_shift_triple)");
}

}  // namespace

std::vector<std::string> validate_config(const ExperimentConfig &cfg) {
    if (!(cfg.T >= kZetaTMin)) throw std::domain_error("config: T below supported range");
    if (!(cfg.U > 0.0)) throw std::domain_error("config: U must be > 0");
    if (!(cfg.x1 < cfg.x2)) throw std::domain_error("config: x1 < x2 required");
    if (!(cfg.y1 < cfg.y2)) throw std::domain_error("config: y1 < y2 required");
    const double half_pi = kPi / 2.0;
    if (!(cfg.x1 >= -half_pi && cfg.x2 <= half_pi && cfg.y1 >= -half_pi && cfg.y2 <= half_pi))
        throw std::domain_error("config: endpoints must lie in [-pi/2, pi/2]");
    if (!(cfg.eps > 0.0)) throw std::domain_error("config: eps must be > 0");
    if (!(cfg.quad_tol > 0.0)) throw std::domain_error("config: quad_tol must be > 0");
    validate_shift_scale(cfg.shifts, cfg.T);
    // shifted evaluation must stay inside the supported z domain
    const double t_low = cfg.T - spacing_estimate(cfg.T) + std::min(cfg.shifts.min_shift(), 0.0);
    if (t_low < kZetaTMin)
        throw std::domain_error("config: shifts push evaluation below the supported range");
    return validate_window(cfg.T, cfg.U, cfg.eps, cfg.shifts).warnings;
}

double main_term(SetFamily family, double a1, double a2, double U,
                 const ShiftTriple &shifts) {
    const double base = (2.0 / kPi) * U * std::sin(0.5 * (a2 - a1)) *
                        std::cos(0.5 * (a1 + a2) + shifts.sum() * std::log(shifts.P));
    return family == SetFamily::G5 ? base : -base;
}

std::vector<std::string> degeneracy_check(const ExperimentConfig &cfg) {
    std::vector<std::string> out;
    check_phase(cfg.x1, cfg.x2, cfg.shifts, cfg.T, cfg.eps, "x", out);
    check_phase(cfg.y1, cfg.y2, cfg.shifts, cfg.T, cfg.eps, "y", out);
    return out;
}

CorrelationReport run_correlation(const ExperimentConfig &cfg, SetFamily family) {
    std::vector<std::string> warnings = validate_config(cfg);

    const double a1 = (family == SetFamily::G5) ? cfg.x1 : cfg.y1;
    const double a2 = (family == SetFamily::G5) ? cfg.x2 : cfg.y2;
    const DisjointSet set = build_set(family, a1, a2, cfg.T, cfg.U);

    const ShiftTriple shifts = cfg.shifts;
    const QuadResult q = integrate([&shifts](double t) { return z_triple(t, shifts); }, set,
                                   cfg.quad_tol, resolve_threads(cfg.threads));

    CorrelationReport r;
    r.family = family;
    r.T = cfg.T;
    r.U = cfg.U;
    r.a1 = a1;
    r.a2 = a2;
    r.shifts = shifts;
    r.lhs_cubic = q.value;
    r.lhs_hatted = 2.0 * q.value;
    r.main_term = main_term(family, a1, a2, cfg.U, shifts);
    r.error_term_scale = std::pow(cfg.T, 13.0 / 16.0);
    r.abs_dev = std::abs(r.lhs_cubic - r.main_term);
    r.rel_dev = r.main_term != 0.0 ? r.abs_dev / std::abs(r.main_term)
                                   : std::numeric_limits<double>::infinity();
    r.quad_err = q.err_estimate;
    r.quad_panels = q.panels;
    r.quad_evals = q.evals;
    r.set_measure = measure(set);
    for (auto &w : degeneracy_check(cfg)) warnings.push_back(std::move(w));
    r.warnings = std::move(warnings);
    return r;
}

SplittingReport run_splitting(const ExperimentConfig &cfg, std::int64_t k, double z) {
    if (!(z >= 0.0 && z <= kPi))
        throw std::domain_error("run_splitting: z must lie in [0, pi]");
    const std::int64_t L = degeneracy_scan_limit(cfg.T, cfg.eps);
    if (std::llabs(k) > L)
        throw std::domain_error("run_splitting: |k| exceeds the admissible range L = " +
                                std::to_string(L));

    ExperimentConfig c = cfg;
    const double lnP = std::log(std::sqrt(cfg.T / kTwoPi));
    const double rho = (2.0 * static_cast<double>(k) * kPi + z) / (2.0 * lnP);
    c.shifts = make_shift_triple(0.0, rho, rho, cfg.T);

    SplittingReport r;
    r.k = k;
    r.z = z;
    r.rho = rho;
    r.g5 = run_correlation(c, SetFamily::G5);
    r.g6 = run_correlation(c, SetFamily::G6);
    const double g5_reduced = (2.0 / kPi) * cfg.U * std::sin(0.5 * (cfg.x2 - cfg.x1)) *
                              std::cos(0.5 * (cfg.x1 + cfg.x2) + z);
    const double g6_reduced = (2.0 / kPi) * cfg.U * std::sin(0.5 * (cfg.y2 - cfg.y1)) *
                              std::cos(0.5 * (cfg.y1 + cfg.y2) + z);
    r.main_g5_reduced = g5_reduced;
    r.main_g6_reduced = -g6_reduced;
    return r;
}

CubicReport run_cubic(const ExperimentConfig &cfg, double x, double y) {
    if (!(x > 0.0 && x < kPi / 2.0 && y > 0.0 && y < kPi / 2.0))
        throw std::domain_error("run_cubic: 0 < x, y < pi/2 required");
    ExperimentConfig c = cfg;
    c.x1 = -x;
    c.x2 = x;
    c.y1 = -y;
    c.y2 = y;
    c.shifts = make_shift_triple(0.0, 0.0, 0.0, cfg.T);

    CubicReport r;
    r.x = x;
    r.y = y;
    r.g5 = run_correlation(c, SetFamily::G5);
    r.g6 = run_correlation(c, SetFamily::G6);
    return r;
}

EqualAreasReport run_equal_areas(const ExperimentConfig &cfg, double x, std::int64_t k,
                                 double area_eps) {
    if (!(x > 0.0 && x < kPi / 2.0))
        throw std::domain_error("run_equal_areas: 0 < x < pi/2 required");
    const std::int64_t L = degeneracy_scan_limit(cfg.T, cfg.eps);
    if (std::llabs(k) > L)
        throw std::domain_error("run_equal_areas: |k| exceeds the admissible range");
    const double lnP = std::log(std::sqrt(cfg.T / kTwoPi));
    const double required = 2.0 * static_cast<double>(k) * kPi / lnP;
    if (std::abs(cfg.shifts.sum() - required) > 1e-9)
        throw std::invalid_argument(
            "run_equal_areas: rho1 + rho2 + rho3 must equal 2 k pi / ln P (residual " +
            std::to_string(cfg.shifts.sum() - required) + ")");

    ExperimentConfig c = cfg;
    c.x1 = -x;
    c.x2 = x;
    c.y1 = -x;
    c.y2 = x;
    std::vector<std::string> warnings = validate_config(c);

    const int threads = resolve_threads(cfg.threads);
    const ShiftTriple shifts = c.shifts;
    const auto triple = [&shifts](double t) { return z_triple(t, shifts); };

    EqualAreasReport r;
    r.x = x;
    r.k = k;
    r.area_eps = area_eps;

    double quad_err = 0.0;
    double i_plus = 0.0, i_minus = 0.0;
    double m_plus = 0.0, m_minus = 0.0, m_total = 0.0;
    for (const SetFamily family : {SetFamily::G5, SetFamily::G6}) {
        const DisjointSet set = build_set(family, -x, x, cfg.T, cfg.U);
        const auto [sp, sm] = sign_partition(set, triple, threads);
        const QuadResult qfull = integrate(triple, set, cfg.quad_tol, threads);
        const QuadResult qp = integrate(triple, sp, cfg.quad_tol, threads);
        const QuadResult qm = integrate(triple, sm, cfg.quad_tol, threads);
        if (family == SetFamily::G5) {
            r.i_g5 = qfull.value;
            r.i_g5_plus = qp.value;
            r.i_g5_minus = qm.value;
        } else {
            r.i_g6 = qfull.value;
            r.i_g6_plus = qp.value;
            r.i_g6_minus = qm.value;
        }
        i_plus += qp.value;
        i_minus += qm.value;
        quad_err += qfull.err_estimate + qp.err_estimate + qm.err_estimate;
        m_plus += measure(sp);
        m_minus += measure(sm);
        m_total += measure(set);
    }
    r.i_plus = i_plus;
    r.i_minus = i_minus;
    r.measure_plus = m_plus;
    r.measure_minus = m_minus;
    r.measure_total = m_total;
    r.quad_err = quad_err;
    r.cancellation = std::abs(i_plus + i_minus) / std::max(i_plus, -i_minus);
    r.lower_bound = (1.0 - area_eps) * (2.0 / kPi) * cfg.U * std::sin(x);
    r.plus_exceeds_bound = i_plus > r.lower_bound;
    r.minus_exceeds_bound = -i_minus > r.lower_bound;
    r.warnings = std::move(warnings);
    return r;
}

}  // namespace zl
