// Frozen high-precision reference scalars for the test suite.
// Generated by tests/oracle/generate_fixtures.py; do not edit by hand.
#pragma once

namespace oracle {

// first zero ordinate
inline constexpr double kFirstZero = 14.13472514173469379046;

// Gram point g_0: theta(g_0) = 0
inline constexpr double kGramPoint0 = 17.84559954041086081683;

// theta_1(1e5), closed form at 40 digits
inline constexpr double kTheta1At1e5 = 433752.0272289624481023;

// theta_1(1e7), closed form at 40 digits
inline constexpr double kTheta1At1e7 = 66401092.53004578982410;

// Riemann-Siegel theta(1e6)
inline constexpr double kThetaAt1e6 = 5488816.353078403444883;

// theta at the Gram-point fixture value
inline constexpr double kThetaAt17_8 = 6.374132388518474769801e-11;

// li(2)
inline constexpr double kLi2 = 1.045163780117492784845;

// li(1e6)
inline constexpr double kLi1e6 = 78627.54915946218191986;

// li(1e8)
inline constexpr double kLi1e8 = 5762209.375448031467569;

// li(1e10)
inline constexpr double kLi1e10 = 455055614.5866230756095;

// li(1e20)
inline constexpr double kLi1e20 = 2220819602783663483.548;

// Euler-Mascheroni constant
inline constexpr double kEulerGamma = 0.5772156649015328606065;

}  // namespace oracle
