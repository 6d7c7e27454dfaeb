/*
 * experiments.hpp — correlation experiments over the disconnected sets.
 *
 * Everything quantitative is computed on the cubic (unhatted) side,
 *
 *     I(family) = integral over G of Z(t+rho1) Z(t+rho2) Z(t+rho3) dt,
 *
 * whose main term is
 *
 *     +- (2/pi) U sin((a2-a1)/2) cos((a1+a2)/2 + (rho1+rho2+rho3) ln P),
 *
 * '+' for G5, '-' for G6, P = sqrt(T/2pi).  The weighted fifth-order
 * integral over the reverse-image sets equals exactly twice the cubic one
 * (a transformation identity, not an approximation), so reports carry
 * lhs_hatted = 2 * lhs_cubic alongside the computed value.
 *
 * The asymptotic error term of the main-term formula has scale T^(13/16)
 * with an ineffective constant; reported deviations are expectations to be
 * examined, not hard theorems, and every report says what it measured.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zl/quad.hpp"
#include "zl/rs_zeta.hpp"
#include "zl/sets.hpp"

namespace zl {

struct ExperimentConfig {
    double T = 1e6;
    double U = 1e4;
    double x1 = -1.5707;  // G5 endpoints
    double x2 = 1.5707;
    double y1 = -1.5707;  // G6 endpoints
    double y2 = 1.5707;
    ShiftTriple shifts;
    double eps = 0.01;       // window-exponent epsilon
    double quad_tol = 1e-4;  // absolute quadrature tolerance
    int threads = 0;         // <= 0: use hardware concurrency
};

// Hard validation (ordering, ranges, shift/domain guard); returns the
// window warnings.  Throws std::domain_error / std::invalid_argument.
std::vector<std::string> validate_config(const ExperimentConfig &cfg);

struct CorrelationReport {
    SetFamily family = SetFamily::G5;
    double T = 0.0, U = 0.0, a1 = 0.0, a2 = 0.0;
    ShiftTriple shifts;
    double lhs_cubic = 0.0;         // computed integral of the triple product
    double lhs_hatted = 0.0;        // exactly 2 * lhs_cubic
    double main_term = 0.0;         // cubic-side closed form
    double error_term_scale = 0.0;  // T^(13/16)
    double abs_dev = 0.0;           // |lhs_cubic - main_term|
    double rel_dev = 0.0;           // abs_dev / |main_term|
    double quad_err = 0.0;
    std::int64_t quad_panels = 0;
    std::int64_t quad_evals = 0;
    double set_measure = 0.0;
    std::vector<std::string> warnings;
};

// Cubic-side main term; '+' for G5, '-' for G6 (exact negation).
double main_term(SetFamily family, double a1, double a2, double U,
                 const ShiftTriple &shifts);

// Degeneracy guards: endpoint equality and the phase
// a1 + a2 + 2 (rho1+rho2+rho3) ln P falling within 0.1 rad of an odd
// multiple (2k+1) pi with |k| <= L, L = ceil(T^(1/48-eps) ln T).
std::vector<std::string> degeneracy_check(const ExperimentConfig &cfg);

// Build the family's set, integrate the shifted triple product, compare
// with the main term.
CorrelationReport run_correlation(const ExperimentConfig &cfg, SetFamily family);

struct SplittingReport {
    std::int64_t k = 0;
    double z = 0.0;    // in [0, pi]
    double rho = 0.0;  // (2 k pi + z) / (2 ln P); shifts become (0, rho, rho)
    CorrelationReport g5;
    CorrelationReport g6;
    // main terms in the reduced form +-(2/pi) U sin((a2-a1)/2) cos((a1+a2)/2 + z);
    // equal to the general formula up to rounding in the phase fold
    double main_g5_reduced = 0.0;
    double main_g6_reduced = 0.0;
};

// Shift splitting rho2 = rho3 = (2 k pi + z)/(2 ln P), rho1 = 0.
SplittingReport run_splitting(const ExperimentConfig &cfg, std::int64_t k, double z);

struct CubicReport {
    double x = 0.0, y = 0.0;
    CorrelationReport g5;  // over G5(-x, x), main term  (2/pi) U sin x
    CorrelationReport g6;  // over G6(-y, y), main term -(2/pi) U sin y
};

// Pure-cube case: symmetric endpoints, all shifts zero; 0 < x, y < pi/2.
CubicReport run_cubic(const ExperimentConfig &cfg, double x, double y);

struct EqualAreasReport {
    double x = 0.0;
    std::int64_t k = 0;
    double area_eps = 0.0;
    double i_plus = 0.0;        // integral over G5+ u G6+ (positive part)
    double i_minus = 0.0;       // integral over G5- u G6- (negative part)
    double i_g5 = 0.0;          // full-set integrals, for the decomposition identity
    double i_g6 = 0.0;
    double i_g5_plus = 0.0, i_g5_minus = 0.0;
    double i_g6_plus = 0.0, i_g6_minus = 0.0;
    double cancellation = 0.0;  // |i_plus + i_minus| / max(i_plus, -i_minus)
    double lower_bound = 0.0;   // (1 - area_eps) (2/pi) U sin x
    bool plus_exceeds_bound = false;
    bool minus_exceeds_bound = false;
    double measure_plus = 0.0, measure_minus = 0.0, measure_total = 0.0;
    double quad_err = 0.0;
    std::vector<std::string> warnings;
};

// Sign-partitioned integration of the triple product over G5(-x,x) and
// G6(-x,x).  Requires sum(rho) = 2 k pi / ln P within 1e-9 and |k| <= L.
EqualAreasReport run_equal_areas(const ExperimentConfig &cfg, double x, std::int64_t k,
                                 double area_eps = 0.3);

}  // namespace zl
