#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "plot.hpp"
#include "zl/errors.hpp"
#include "zl/experiments.hpp"
#include "zl/ladder.hpp"
#include "zl/nodes.hpp"
#include "zl/serialize.hpp"

namespace zl::cli {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

struct OutputSink {
    std::string format = "json";  // payload format for --out
    std::string out_path;
    std::string manifest_path;
    std::string plot_prefix;
    std::vector<std::string> argv_echo;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    // rows for CSV payloads: header + rows of preformatted cells
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    json config;
    json reports = json::array();
    std::string command;

    void finish(int exit_code) const {
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
            if (format == "csv") {
                f << join(csv_header) << "\n";
                for (const auto &row : csv_rows) f << join(row) << "\n";
            } else {
                f << payload().dump(2) << "\n";
            }
        }
        if (!manifest_path.empty()) {
            std::ofstream f(manifest_path);
            if (!f) throw std::runtime_error("cannot open for writing: " + manifest_path);
            json m = payload();
            m["tool"] = kToolName;
            m["version"] = kToolVersion;
            m["timestamp"] = iso_now();
            m["argv"] = argv_echo;
            m["exit_code"] = exit_code;
            m["runtime_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                    .count();
            f << m.dump(2) << "\n";
        }
    }

    json payload() const {
        return json{{"command", command}, {"config", config}, {"reports", reports}};
    }

    static std::string join(const std::vector<std::string> &cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += ",";
            s += cells[i];
        }
        return s;
    }

    static std::string iso_now() {
        const std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        return buf;
    }
};

std::string cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string cell(std::int64_t v) { return std::to_string(v); }

double maybe_deg(double v, bool deg) { return deg ? v * kPi / 180.0 : v; }

std::vector<double> parse_list(const std::string &s, const char *what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception &) {
            throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty list for ") + what);
    return out;
}

void print_correlation(const CorrelationReport &r) {
    std::printf("%-3s T=%.6g U=%.6g endpoints=[%.6g, %.6g] rho=(%.6g, %.6g, %.6g)\n",
                family_name(r.family), r.T, r.U, r.a1, r.a2, r.shifts.rho1, r.shifts.rho2,
                r.shifts.rho3);
    std::printf("    lhs_cubic  = %-18.10g lhs_hatted = %.10g\n", r.lhs_cubic, r.lhs_hatted);
    std::printf("    main_term  = %-18.10g abs_dev    = %.6g\n", r.main_term, r.abs_dev);
    std::printf("    rel_dev    = %-18.6g error_term_scale = %.6g\n", r.rel_dev,
                r.error_term_scale);
    std::printf("    quad_err   = %-18.4g panels=%lld evals=%lld measure=%.8g\n", r.quad_err,
                static_cast<long long>(r.quad_panels), static_cast<long long>(r.quad_evals),
                r.set_measure);
    for (const auto &w : r.warnings) std::printf("    warning: %s\n", w.c_str());
}

void csv_correlation_header(OutputSink &sink) {
    sink.csv_header = {"family",  "T",       "U",          "a1",         "a2",
                       "rho1",    "rho2",    "rho3",       "P",          "lhs_cubic",
                       "lhs_hatted", "main_term", "error_term_scale", "abs_dev", "rel_dev",
                       "quad_err", "quad_panels", "quad_evals", "set_measure"};
}

void csv_correlation_row(OutputSink &sink, const CorrelationReport &r) {
    sink.csv_rows.push_back({family_name(r.family), cell(r.T), cell(r.U), cell(r.a1), cell(r.a2),
                             cell(r.shifts.rho1), cell(r.shifts.rho2), cell(r.shifts.rho3),
                             cell(r.shifts.P), cell(r.lhs_cubic), cell(r.lhs_hatted),
                             cell(r.main_term), cell(r.error_term_scale), cell(r.abs_dev),
                             cell(r.rel_dev), cell(r.quad_err), cell(r.quad_panels),
                             cell(r.quad_evals), cell(r.set_measure)});
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    std::string manifest_path;
    std::string plot_prefix;
    int threads = 0;
    bool deg = false;
};

void add_common(CLI::App *cmd, CommonOpts &o, bool with_threads = true) {
    cmd->add_option("--format", o.format, "payload format for --out: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out_path, "write results to this path (json/csv per --format)");
    cmd->add_option("--manifest", o.manifest_path, "write a full run manifest (json)");
    cmd->add_option("--plot", o.plot_prefix, "write plot data + svg under this path prefix");
    if (with_threads)
        cmd->add_option("--threads", o.threads, "worker threads (default: available cores)");
    cmd->add_flag("--deg", o.deg, "interpret angle arguments in degrees");
}

void seed_sink(OutputSink &sink, const CommonOpts &o, const std::string &command) {
    sink.format = o.format;
    sink.out_path = o.out_path;
    sink.manifest_path = o.manifest_path;
    sink.plot_prefix = o.plot_prefix;
    sink.command = command;
}

int run_z(double t, OutputSink &sink) {
    const ZEval e = z(t);
    std::printf("t = %.17g\nZ(t) = %.12g\nerr_bound = %.3g\n", t, e.value, e.err_bound);
    sink.config = json{{"t", t}};
    sink.reports.push_back(json{{"t", t}, {"value", e.value}, {"err_bound", e.err_bound}});
    sink.csv_header = {"t", "value", "err_bound"};
    sink.csv_rows.push_back({cell(t), cell(e.value), cell(e.err_bound)});
    return 0;
}

int run_nodes(const std::vector<std::int64_t> &nus, double tau, double T, double U,
              const std::string &parity, OutputSink &sink) {
    std::vector<std::int64_t> list = nus;
    if (list.empty()) {
        if (!(T > 0.0 && U > 0.0))
            throw std::invalid_argument("nodes: give --nu or both --T and --U");
        if (parity == "even" || parity == "both")
            for (auto nu : nodes_in_window(T, U, Parity::Even)) list.push_back(nu);
        if (parity == "odd" || parity == "both")
            for (auto nu : nodes_in_window(T, U, Parity::Odd)) list.push_back(nu);
        std::sort(list.begin(), list.end());
    }
    sink.config = json{{"tau", tau}, {"T", T}, {"U", U}, {"parity", parity}};
    sink.csv_header = {"nu", "tau", "k", "residual"};
    std::printf("%-12s %-10s %-22s %s\n", "nu", "tau", "k_nu(tau)", "residual");
    for (const auto nu : list) {
        const double k = node({nu, tau});
        const double residual = theta1(k) - (kPi * static_cast<double>(nu) + tau) / 3.0;
        std::printf("%-12lld %-10.6g %-22.12f %.3e\n", static_cast<long long>(nu), tau, k,
                    residual);
        sink.reports.push_back(
            json{{"nu", nu}, {"tau", tau}, {"k", k}, {"residual", residual}});
        sink.csv_rows.push_back({cell(nu), cell(tau), cell(k), cell(residual)});
    }
    return 0;
}

int run_sets(const std::string &family_s, double T, double U, double x1, double x2,
             double eps, OutputSink &sink) {
    const SetFamily family = (family_s == "g6") ? SetFamily::G6 : SetFamily::G5;
    const DisjointSet s = build_set(family, x1, x2, T, U);
    std::printf("%s(%g, %g, T=%g, U=%g): %zu intervals, measure %.10g, density ref %.10g\n",
                family_name(family), x1, x2, T, U, s.intervals.size(), measure(s),
                (x2 - x1) * U / (2.0 * kPi));
    sink.config = json{{"family", family_name(family)}, {"T", T}, {"U", U},
                       {"x1", x1},                      {"x2", x2}, {"eps", eps}};
    sink.reports.push_back(json(s));
    sink.csv_header = {"nu", "lo", "hi", "length"};
    for (std::size_t i = 0; i < s.intervals.size(); ++i)
        sink.csv_rows.push_back({cell(s.indices[i]), cell(s.intervals[i].lo),
                                 cell(s.intervals[i].hi), cell(s.intervals[i].length())});

    if (!sink.plot_prefix.empty()) {
        const DisjointSet img = map_set(s);
        const LadderReport lr = disjointness_report(T, U, eps);
        std::vector<LabeledBand> bands;
        for (const auto &iv : s.intervals) bands.push_back({family_name(family), iv});
        for (const auto &iv : img.intervals) bands.push_back({"image", iv});
        write_band_data(sink.plot_prefix + ".bands.dat", bands);
        write_band_svg(sink.plot_prefix + ".bands.svg", s, img, lr.disjoint);
        std::printf("plot: %s.bands.dat, %s.bands.svg\n", sink.plot_prefix.c_str(),
                    sink.plot_prefix.c_str());
    }
    return 0;
}

int run_ladder(double T, double U, double eps, OutputSink &sink) {
    const LadderReport r = disjointness_report(T, U, eps);
    std::printf("T        = %-22.10g U          = %.10g\n", r.T, r.U);
    std::printf("T_ring   = %-22.10g TU_ring    = %.10g\n", r.T_ring, r.TU_ring);
    std::printf("d        = %-22.10g d_predicted = %.10g\n", r.d, r.d_predicted);
    std::printf("disjoint = %-22s gap_bound  = %.10g (exceeded: %s)\n",
                r.disjoint ? "true" : "false", r.gap_bound,
                r.gap_exceeds_bound ? "true" : "false");
    std::printf("regime_reached = %s\n", r.regime_reached ? "true" : "false");
    for (const auto &n : r.notes) std::printf("note: %s\n", n.c_str());
    sink.config = json{{"T", T}, {"U", U}, {"eps", eps}};
    sink.reports.push_back(json(r));
    sink.csv_header = {"T", "U", "eps", "T_ring", "TU_ring", "d", "d_predicted", "disjoint",
                       "gap_bound", "gap_exceeds_bound", "regime_reached"};
    sink.csv_rows.push_back({cell(r.T), cell(r.U), cell(r.eps), cell(r.T_ring), cell(r.TU_ring),
                             cell(r.d), cell(r.d_predicted), r.disjoint ? "true" : "false",
                             cell(r.gap_bound), r.gap_exceeds_bound ? "true" : "false",
                             r.regime_reached ? "true" : "false"});
    return 0;
}

ExperimentConfig make_config(double T, double U, double x1, double x2, double y1, double y2,
                             const std::vector<double> &rho, double eps, double quad_tol,
                             int threads) {
    ExperimentConfig cfg;
    cfg.T = T;
    cfg.U = U;
    cfg.x1 = x1;
    cfg.x2 = x2;
    cfg.y1 = y1;
    cfg.y2 = y2;
    if (rho.size() != 3) throw std::invalid_argument("--rho needs three comma-separated values");
    cfg.shifts = make_shift_triple(rho[0], rho[1], rho[2], T);
    cfg.eps = eps;
    cfg.quad_tol = quad_tol;
    cfg.threads = threads;
    return cfg;
}

int run_correlate(const std::vector<double> &Ts, double U, double x1, double x2, double y1,
                  double y2, const std::vector<double> &rho, const std::string &family,
                  double eps, double quad_tol, OutputSink &sink, int threads) {
    sink.csv_header.clear();
    csv_correlation_header(sink);
    std::vector<std::pair<double, double>> series;  // (T, rel_dev of G5)
    json cfgs = json::array();
    for (const double T : Ts) {
        const ExperimentConfig cfg = make_config(T, U, x1, x2, y1, y2, rho, eps, quad_tol, threads);
        cfgs.push_back(json(cfg));
        CorrelationReport g5, g6;
        if (family == "g5" || family == "both") {
            g5 = run_correlation(cfg, SetFamily::G5);
            print_correlation(g5);
            sink.reports.push_back(json(g5));
            csv_correlation_row(sink, g5);
            series.emplace_back(T, g5.rel_dev);
        }
        if (family == "g6" || family == "both") {
            g6 = run_correlation(cfg, SetFamily::G6);
            print_correlation(g6);
            sink.reports.push_back(json(g6));
            csv_correlation_row(sink, g6);
        }
        if (family == "both") {
            const double half_diff = 0.5 * (g5.lhs_cubic - g6.lhs_cubic);
            std::printf("    family difference: (G5 - G6)/2 = %.10g vs main %.10g "
                        "(rel dev %.4g)\n",
                        half_diff, g5.main_term,
                        std::abs(half_diff - g5.main_term) / std::abs(g5.main_term));
        }
    }
    sink.config = cfgs.size() == 1 ? cfgs[0] : json{{"runs", cfgs}};
    if (!sink.plot_prefix.empty()) {
        write_series_data(sink.plot_prefix + ".series.dat", series, "T", "rel_dev");
        write_series_svg(sink.plot_prefix + ".series.svg", series, "T", "rel_dev");
        std::printf("plot: %s.series.dat, %s.series.svg\n", sink.plot_prefix.c_str(),
                    sink.plot_prefix.c_str());
    }
    return 0;
}

int run_splitting_cmd(double T, double U, double x1, double x2, double y1, double y2,
                      std::int64_t k, const std::vector<double> &zs, double eps,
                      double quad_tol, OutputSink &sink, int threads) {
    const std::vector<double> rho0{0.0, 0.0, 0.0};
    const ExperimentConfig cfg =
        make_config(T, U, x1, x2, y1, y2, rho0, eps, quad_tol, threads);
    sink.config = json(cfg);
    sink.config["k"] = k;
    csv_correlation_header(sink);
    sink.csv_header.insert(sink.csv_header.begin(), {"k", "z", "rho"});
    for (const double zv : zs) {
        const SplittingReport r = run_splitting(cfg, k, zv);
        std::printf("== splitting k=%lld z=%.10g rho=%.10g ==\n", static_cast<long long>(k), zv,
                    r.rho);
        print_correlation(r.g5);
        std::printf("    reduced main (G5) = %.10g\n", r.main_g5_reduced);
        print_correlation(r.g6);
        std::printf("    reduced main (G6) = %.10g\n", r.main_g6_reduced);
        sink.reports.push_back(json(r));
        for (const CorrelationReport *cr : {&r.g5, &r.g6}) {
            csv_correlation_row(sink, *cr);
            auto &row = sink.csv_rows.back();
            row.insert(row.begin(), {cell(k), cell(zv), cell(r.rho)});
        }
    }
    return 0;
}

int run_cubic_cmd(double T, double U, double x, double y, double eps, double quad_tol,
                  OutputSink &sink, int threads) {
    const std::vector<double> rho0{0.0, 0.0, 0.0};
    ExperimentConfig cfg = make_config(T, U, -1.0, 1.0, -1.0, 1.0, rho0, eps, quad_tol, threads);
    const CubicReport r = run_cubic(cfg, x, y);
    std::printf("== cubic x=%.10g y=%.10g ==\n", x, y);
    print_correlation(r.g5);
    print_correlation(r.g6);
    sink.config = json(cfg);
    sink.config["x"] = x;
    sink.config["y"] = y;
    sink.reports.push_back(json(r));
    csv_correlation_header(sink);
    csv_correlation_row(sink, r.g5);
    csv_correlation_row(sink, r.g6);
    return 0;
}

int run_areas(double T, double U, double x, std::int64_t k, std::vector<double> rho,
              double area_eps, double eps, double quad_tol, OutputSink &sink, int threads) {
    if (rho.empty()) {
        // default shift triple satisfying the sum condition: equal thirds
        const double lnP = std::log(std::sqrt(T / (2.0 * kPi)));
        const double each = 2.0 * static_cast<double>(k) * kPi / lnP / 3.0;
        rho = {each, each, each};
    }
    const ExperimentConfig cfg = make_config(T, U, -x, x, -x, x, rho, eps, quad_tol, threads);
    const EqualAreasReport r = run_equal_areas(cfg, x, k, area_eps);
    std::printf("== areas T=%g U=%g x=%.10g k=%lld ==\n", T, U, x, static_cast<long long>(k));
    std::printf("I+ = %-18.10g I- = %.10g\n", r.i_plus, r.i_minus);
    std::printf("cancellation |I+ + I-| / max(I+, -I-) = %.6g\n", r.cancellation);
    std::printf("lower bound (1-%.2g)(2/pi) U sin x = %.10g  (I+ > bound: %s, -I- > bound: %s)\n",
                r.area_eps, r.lower_bound, r.plus_exceeds_bound ? "yes" : "no",
                r.minus_exceeds_bound ? "yes" : "no");
    std::printf("decomposition: G5 %.10g = %.10g + %.10g | G6 %.10g = %.10g + %.10g\n", r.i_g5,
                r.i_g5_plus, r.i_g5_minus, r.i_g6, r.i_g6_plus, r.i_g6_minus);
    std::printf("measures: + %.8g, - %.8g, total %.8g; quad_err %.4g\n", r.measure_plus,
                r.measure_minus, r.measure_total, r.quad_err);
    for (const auto &w : r.warnings) std::printf("warning: %s\n", w.c_str());
    sink.config = json(cfg);
    sink.config["x"] = x;
    sink.config["k"] = k;
    sink.config["area_eps"] = area_eps;
    sink.reports.push_back(json(r));
    sink.csv_header = {"T", "U", "x", "k", "i_plus", "i_minus", "cancellation", "lower_bound",
                       "measure_plus", "measure_minus", "measure_total", "quad_err"};
    sink.csv_rows.push_back({cell(T), cell(U), cell(x), cell(k), cell(r.i_plus), cell(r.i_minus),
                             cell(r.cancellation), cell(r.lower_bound), cell(r.measure_plus),
                             cell(r.measure_minus), cell(r.measure_total), cell(r.quad_err)});
    return 0;
}

}  // namespace

int dispatch(int argc, const char *const *argv) {
    CLI::App app{std::string(kToolName) +
                 " - disconnected-set correlation experiments on the critical line"};
    app.footer("Environment: ZL_SIEVE_BOUND overrides the prime-sieve ceiling (default 1e8).");
    app.require_subcommand(1);

    OutputSink sink;
    for (int i = 0; i < argc; ++i) sink.argv_echo.emplace_back(argv[i]);

    // ---- z ----
    auto *cz = app.add_subcommand("z", "evaluate the Hardy Z function");
    double z_t = 0.0;
    cz->add_option("--t", z_t, "evaluation point (t >= 10)")->required();
    CommonOpts oz;
    add_common(cz, oz, false);

    // ---- nodes ----
    auto *cn = app.add_subcommand("nodes", "solve the phase equation for nodes k_nu(tau)");
    std::vector<std::int64_t> n_nus;
    double n_tau = 0.0, n_T = 0.0, n_U = 0.0;
    std::string n_parity = "both";
    cn->add_option("--nu", n_nus, "node indices (repeatable)");
    cn->add_option("--tau", n_tau, "tau in [-pi, pi] (default 0)");
    cn->add_option("--T", n_T, "window start (list mode)");
    cn->add_option("--U", n_U, "window length (list mode)");
    cn->add_option("--parity", n_parity, "even, odd or both (window mode)")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    CommonOpts on;
    add_common(cn, on, false);

    // ---- sets ----
    auto *cs = app.add_subcommand("sets", "build a disconnected set G5/G6");
    std::string s_family = "g5";
    double s_T = 1e5, s_U = 1e3, s_x1 = -kPi / 2, s_x2 = kPi / 2, s_eps = 0.01;
    cs->add_option("--family", s_family, "g5 or g6")->check(CLI::IsMember({"g5", "g6"}));
    cs->add_option("--T", s_T, "window start")->required();
    cs->add_option("--U", s_U, "window length")->required();
    cs->add_option("--x1", s_x1, "left endpoint in [-pi/2, pi/2]");
    cs->add_option("--x2", s_x2, "right endpoint in [-pi/2, pi/2]");
    cs->add_option("--eps", s_eps, "window epsilon (plot annotations)");
    CommonOpts os_;
    add_common(cs, os_, false);

    // ---- ladder ----
    auto *cl = app.add_subcommand("ladder", "reverse-image disjointness report");
    double l_T = 1e5, l_U = 1e4, l_eps = 0.01;
    cl->add_option("--T", l_T, "window start")->required();
    cl->add_option("--U", l_U, "window length")->required();
    cl->add_option("--eps", l_eps, "epsilon in the gap bound");
    CommonOpts ol;
    add_common(cl, ol, false);

    // ---- correlate ----
    auto *cc = app.add_subcommand("correlate", "triple-product correlation over G5/G6");
    std::string c_T = "1e6";
    double c_U = 1e4, c_x1 = -kPi / 2, c_x2 = kPi / 2;
    double c_y1 = -kPi / 2, c_y2 = kPi / 2, c_eps = 0.01, c_tol = 1e-4;
    std::string c_rho = "0,0,0", c_family = "both";
    cc->add_option("--T", c_T, "window start; comma list gives a deviation series");
    cc->add_option("--U", c_U, "window length");
    cc->add_option("--x1", c_x1, "G5 left endpoint");
    cc->add_option("--x2", c_x2, "G5 right endpoint");
    cc->add_option("--y1", c_y1, "G6 left endpoint");
    cc->add_option("--y2", c_y2, "G6 right endpoint");
    cc->add_option("--rho", c_rho, "shifts rho1,rho2,rho3");
    cc->add_option("--family", c_family, "g5, g6 or both")
        ->check(CLI::IsMember({"g5", "g6", "both"}));
    cc->add_option("--eps", c_eps, "window epsilon");
    cc->add_option("--quad-tol", c_tol, "absolute quadrature tolerance");
    CommonOpts oc;
    add_common(cc, oc);

    // ---- splitting ----
    auto *cp = app.add_subcommand("splitting", "shift splitting rho2 = rho3 = (2k pi + z)/(2 ln P)");
    double p_T = 1e6, p_U = 1e4, p_x1 = -kPi / 2, p_x2 = kPi / 2;
    double p_y1 = -kPi / 2, p_y2 = kPi / 2, p_eps = 0.01, p_tol = 1e-4;
    std::int64_t p_k = 0;
    double p_z = -1.0;
    cp->add_option("--T", p_T, "window start")->required();
    cp->add_option("--U", p_U, "window length");
    cp->add_option("--x1", p_x1, "G5 left endpoint");
    cp->add_option("--x2", p_x2, "G5 right endpoint");
    cp->add_option("--y1", p_y1, "G6 left endpoint");
    cp->add_option("--y2", p_y2, "G6 right endpoint");
    cp->add_option("--k", p_k, "integer k, |k| <= L");
    cp->add_option("--z", p_z, "z in [0, pi]; omit to run both z=0 and z=pi");
    cp->add_option("--eps", p_eps, "window epsilon");
    cp->add_option("--quad-tol", p_tol, "absolute quadrature tolerance");
    CommonOpts op;
    add_common(cp, op);

    // ---- cubic ----
    auto *cb = app.add_subcommand("cubic", "pure cube over symmetric endpoints, zero shifts");
    double b_T = 1e6, b_U = 1e4, b_x = kPi / 2 - 0.1, b_y = -1.0;
    double b_eps = 0.01, b_tol = 1e-4;
    cb->add_option("--T", b_T, "window start")->required();
    cb->add_option("--U", b_U, "window length");
    cb->add_option("--x", b_x, "G5 half-width in (0, pi/2)");
    cb->add_option("--y", b_y, "G6 half-width (default: x)");
    cb->add_option("--eps", b_eps, "window epsilon");
    cb->add_option("--quad-tol", b_tol, "absolute quadrature tolerance");
    CommonOpts ob;
    add_common(cb, ob);

    // ---- areas ----
    auto *ca = app.add_subcommand("areas", "sign-partitioned equal-areas comparison");
    double a_T = 1e6, a_U = 1e4, a_x = kPi / 2 - 0.1, a_eps = 0.01, a_tol = 1e-4;
    double a_area_eps = 0.3;
    std::int64_t a_k = 0;
    std::string a_rho;
    ca->add_option("--T", a_T, "window start")->required();
    ca->add_option("--U", a_U, "window length");
    ca->add_option("--x", a_x, "half-width in (0, pi/2)");
    ca->add_option("--k", a_k, "integer k in the shift-sum condition");
    ca->add_option("--rho", a_rho, "explicit shifts rho1,rho2,rho3 (sum = 2k pi / ln P)");
    ca->add_option("--area-eps", a_area_eps, "epsilon in the lower bound (default 0.3)");
    ca->add_option("--eps", a_eps, "window epsilon");
    ca->add_option("--quad-tol", a_tol, "absolute quadrature tolerance");
    CommonOpts oa;
    add_common(ca, oa);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    int rc = 0;
    try {
        if (cz->parsed()) {
            seed_sink(sink, oz, "z");
            rc = run_z(z_t, sink);
        } else if (cn->parsed()) {
            seed_sink(sink, on, "nodes");
            rc = run_nodes(n_nus, maybe_deg(n_tau, on.deg), n_T, n_U, n_parity, sink);
        } else if (cs->parsed()) {
            seed_sink(sink, os_, "sets");
            rc = run_sets(s_family, s_T, s_U, maybe_deg(s_x1, os_.deg), maybe_deg(s_x2, os_.deg),
                          s_eps, sink);
        } else if (cl->parsed()) {
            seed_sink(sink, ol, "ladder");
            rc = run_ladder(l_T, l_U, l_eps, sink);
        } else if (cc->parsed()) {
            seed_sink(sink, oc, "correlate");
            rc = run_correlate(parse_list(c_T, "--T"), c_U, maybe_deg(c_x1, oc.deg),
                               maybe_deg(c_x2, oc.deg), maybe_deg(c_y1, oc.deg),
                               maybe_deg(c_y2, oc.deg), parse_list(c_rho, "--rho"), c_family,
                               c_eps, c_tol, sink, oc.threads);
        } else if (cp->parsed()) {
            seed_sink(sink, op, "splitting");
            std::vector<double> zs;
            if (p_z >= 0.0)
                zs.push_back(maybe_deg(p_z, op.deg));
            else
                zs = {0.0, kPi};
            rc = run_splitting_cmd(p_T, p_U, maybe_deg(p_x1, op.deg), maybe_deg(p_x2, op.deg),
                                   maybe_deg(p_y1, op.deg), maybe_deg(p_y2, op.deg), p_k, zs,
                                   p_eps, p_tol, sink, op.threads);
        } else if (cb->parsed()) {
            seed_sink(sink, ob, "cubic");
            const double x = maybe_deg(b_x, ob.deg);
            const double y = b_y < 0.0 ? x : maybe_deg(b_y, ob.deg);
            rc = run_cubic_cmd(b_T, b_U, x, y, b_eps, b_tol, sink, ob.threads);
        } else if (ca->parsed()) {
            seed_sink(sink, oa, "areas");
            std::vector<double> rho;
            if (!a_rho.empty()) rho = parse_list(a_rho, "--rho");
            rc = run_areas(a_T, a_U, maybe_deg(a_x, oa.deg), a_k, rho, a_area_eps, a_eps, a_tol,
                           sink, oa.threads);
        }
        sink.finish(rc);
    } catch (const std::domain_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const convergence_error &e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "failure: %s\n", e.what());
        return 2;
    }
    return rc;
}

}  // namespace zl::cli
