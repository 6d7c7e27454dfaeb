/*
 * serialize.hpp — JSON views of the report types (nlohmann::json).
 *
 * Field names are stable and documented: reports carry lhs_cubic,
 * lhs_hatted, main_term, rel_dev, quad_err, warnings[]; every report also
 * echoes the parameters that produced it.  Non-finite doubles serialize as
 * null (JSON has no inf/nan).
 */
#pragma once

#include <json.hpp>

#include "zl/experiments.hpp"
#include "zl/ladder.hpp"
#include "zl/sets.hpp"

namespace zl {

inline nlohmann::json json_number(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

inline void to_json(nlohmann::json &j, const ShiftTriple &s) {
    j = {{"rho1", s.rho1}, {"rho2", s.rho2}, {"rho3", s.rho3}, {"P", s.P}};
}

inline void to_json(nlohmann::json &j, const Interval &iv) {
    j = {{"lo", iv.lo}, {"hi", iv.hi}, {"length", iv.length()}};
}

inline void to_json(nlohmann::json &j, const DisjointSet &s) {
    j = {{"family", family_name(s.family)},
         {"T", s.T},
         {"U", s.U},
         {"a1", s.a1},
         {"a2", s.a2},
         {"count", s.intervals.size()},
         {"measure", measure(s)}};
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < s.intervals.size(); ++i) {
        nlohmann::json row = s.intervals[i];
        if (i < s.indices.size()) row["nu"] = s.indices[i];
        rows.push_back(std::move(row));
    }
    j["intervals"] = std::move(rows);
}

inline void to_json(nlohmann::json &j, const WindowReport &r) {
    j = {{"T", r.T},
         {"U", r.U},
         {"eps", r.eps},
         {"u_min", r.u_min},
         {"u_max", r.u_max},
         {"u_in_window", r.u_in_window},
         {"shift_bound", r.shift_bound},
         {"shifts_in_window", r.shifts_in_window},
         {"P", r.P},
         {"warnings", r.warnings}};
}

inline void to_json(nlohmann::json &j, const LadderReport &r) {
    j = {{"T", r.T},
         {"U", r.U},
         {"eps", r.eps},
         {"T_ring", r.T_ring},
         {"TU_ring", r.TU_ring},
         {"d", r.d},
         {"d_predicted", r.d_predicted},
         {"disjoint", r.disjoint},
         {"gap_bound", r.gap_bound},
         {"gap_exceeds_bound", r.gap_exceeds_bound},
         {"regime_reached", r.regime_reached},
         {"notes", r.notes}};
}

inline void to_json(nlohmann::json &j, const ExperimentConfig &c) {
    j = {{"T", c.T},
         {"U", c.U},
         {"x1", c.x1},
         {"x2", c.x2},
         {"y1", c.y1},
         {"y2", c.y2},
         {"shifts", c.shifts},
         {"eps", c.eps},
         {"quad_tol", c.quad_tol},
         {"threads", c.threads}};
}

inline void to_json(nlohmann::json &j, const CorrelationReport &r) {
    j = {{"family", family_name(r.family)},
         {"T", r.T},
         {"U", r.U},
         {"a1", r.a1},
         {"a2", r.a2},
         {"shifts", r.shifts},
         {"lhs_cubic", json_number(r.lhs_cubic)},
         {"lhs_hatted", json_number(r.lhs_hatted)},
         {"main_term", json_number(r.main_term)},
         {"error_term_scale", r.error_term_scale},
         {"abs_dev", json_number(r.abs_dev)},
         {"rel_dev", json_number(r.rel_dev)},
         {"quad_err", json_number(r.quad_err)},
         {"quad_panels", r.quad_panels},
         {"quad_evals", r.quad_evals},
         {"set_measure", r.set_measure},
         {"warnings", r.warnings}};
}

inline void to_json(nlohmann::json &j, const SplittingReport &r) {
    j = {{"k", r.k},
         {"z", r.z},
         {"rho", r.rho},
         {"g5", r.g5},
         {"g6", r.g6},
         {"main_g5_reduced", r.main_g5_reduced},
         {"main_g6_reduced", r.main_g6_reduced}};
}

inline void to_json(nlohmann::json &j, const CubicReport &r) {
    j = {{"x", r.x}, {"y", r.y}, {"g5", r.g5}, {"g6", r.g6}};
}

inline void to_json(nlohmann::json &j, const EqualAreasReport &r) {
    j = {{"x", r.x},
         {"k", r.k},
         {"area_eps", r.area_eps},
         {"i_plus", json_number(r.i_plus)},
         {"i_minus", json_number(r.i_minus)},
         {"i_g5", json_number(r.i_g5)},
         {"i_g6", json_number(r.i_g6)},
         {"i_g5_plus", json_number(r.i_g5_plus)},
         {"i_g5_minus", json_number(r.i_g5_minus)},
         {"i_g6_plus", json_number(r.i_g6_plus)},
         {"i_g6_minus", json_number(r.i_g6_minus)},
         {"cancellation", json_number(r.cancellation)},
         {"lower_bound", r.lower_bound},
         {"plus_exceeds_bound", r.plus_exceeds_bound},
         {"minus_exceeds_bound", r.minus_exceeds_bound},
         {"measure_plus", r.measure_plus},
         {"measure_minus", r.measure_minus},
         {"measure_total", r.measure_total},
         {"quad_err", json_number(r.quad_err)},
         {"warnings", r.warnings}};
}

}  // namespace zl
