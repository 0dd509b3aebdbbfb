#pragma once

#include "seasonal/params.hpp"

// Worked parameter sets used across the test suites. Names describe the
// long-run outcome; thresholds quoted in comments are exact fractions.
namespace refsets {

struct Case {
    seasonal::ModelParameters p;
    seasonal::Schedule s;
};

// ModelParameters field order: d1, d2, r, b1, b2, c1, c2.

// Both species die out: the dry season exceeds both critical lengths
// (tau1_star = tau1_star2 = 20/3 < 7).
inline const Case collapse_long_dry{{0.5, 0.5, 1.0, 0.2, 0.2, 0.4, 0.4}, {7.0, 8.0, 10.0}};

// u dies from the long dry season, v from the long grazing season
// (tau2_star2 = 8.875 >= tau2 = 8).
inline const Case collapse_dry_u_grazed_v{{0.5, 0.3, 1.0, 0.2, 0.2, 0.4, 0.8}, {7.0, 8.0, 10.0}};

// u dies from grazing (tau2_star = 7.5 >= tau2 = 7), v from the dry season
// (tau1_star2 = 100/17 < 6).
inline const Case collapse_grazed_u_dry_v{{0.5, 0.7, 1.0, 0.2, 0.2, 0.4, 0.6}, {6.0, 7.0, 10.0}};

// Both species die from grazing (tau2_star = 7.5, tau2_star2 = 25/3).
inline const Case collapse_grazed_both{{0.5, 0.5, 1.0, 0.2, 0.2, 0.4, 0.6}, {6.0, 7.0, 10.0}};

// (u*(t), 0) globally attracting: tau2_star = 1.5 < 8 < 25/3 = tau2_star2.
inline const Case u_wins{{0.1, 0.5, 1.0, 0.2, 0.2, 0.4, 0.6}, {6.0, 8.0, 10.0}};

// (0, v*(t)) globally attracting: tau2_star2 = 1.5 < 8 < 25/3 = tau2_star.
inline const Case v_wins{{0.5, 0.1, 1.0, 0.2, 0.2, 0.6, 0.4}, {6.0, 8.0, 10.0}};

// Weak competition (b1*b2 = 0.04): unique interior periodic orbit,
// tau2_star = 10/3, tau2_star2 = 2/3.
inline const Case coexistence{{0.5, 0.1, 1.0, 0.2, 0.2, 0.6, 0.6}, {4.0, 7.0, 10.0}};

// Strong competition (b1*b2 = 4): both boundary orbits locally stable.
inline const Case bistable{{0.5, 0.1, 1.0, 2.0, 2.0, 0.6, 0.6}, {4.0, 7.0, 10.0}};

}  // namespace refsets
