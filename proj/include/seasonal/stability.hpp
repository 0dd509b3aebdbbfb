#pragma once

#include <string>
#include <string_view>

#include "seasonal/params.hpp"

namespace seasonal {

// Critical dry-season lengths and grazing-onset times.
//   tau1_star  = T/(d1+1)                       tau1_star2 = r*T/(d2+r)
//   tau2_star  = ((d1+1)*tau1 + (c1-1)*T)/c1    tau2_star2 = ((d2+r)*tau1 + (c2-r)*T)/c2
// Species u persists iff tau2 > tau2_star (equivalently tau1 < tau1_star and
// the grazing onset is late enough); likewise v with the starred-starred pair.
struct Thresholds {
    double tau1_star;
    double tau1_star2;
    double tau2_star;
    double tau2_star2;
};

// Floquet multipliers of the period map at the three boundary fixed points.
//   at (x0, 0): lambda1 (u direction), lambda2 (v direction)
//   at (0, y0): lambda3 (v direction), lambda4 (u direction)
//   at (0, 0):  lambda5 (u direction), lambda6 (v direction)
// lambda1 = 1/lambda5 and lambda3 = 1/lambda6 by construction.
struct Multipliers {
    double lambda1, lambda2, lambda3, lambda4, lambda5, lambda6;
};

// Signed exponents the classification branches on.
//   u_gain  = log gain of the scalar u period map  (= c1*(tau2 - tau2_star))
//   v_gain  = log gain of the scalar v period map  (= c2*(tau2 - tau2_star2))
//   lambda2 = v_gain - r*b2*u_gain   (log of multiplier lambda2)
//   lambda4 = u_gain - (b1/r)*v_gain (log of multiplier lambda4)
struct StabilityExponents {
    double u_gain;
    double v_gain;
    double lambda2;
    double lambda4;
};

enum class Region {
    I_Collapse,           // origin globally attracting, both species die out
    II_UWins,             // (u*(t), 0) globally attracting
    III_VWins,            // (0, v*(t)) globally attracting
    IV_Coexist,           // unique positive periodic orbit, globally attracting
    V_ULAS_Unresolved,    // (u*(t), 0) locally stable; global outcome open
    VI_VLAS_Unresolved,   // (0, v*(t)) locally stable; global outcome open
    VII_Bistable,         // both boundary orbits locally stable
    Boundary,             // a deciding exponent is zero within tolerance
};

std::string_view region_name(Region r);

// Stable integer codes for grid export: Boundary = 0, I..VII = 1..7.
int region_code(Region r);

struct RegimeClassification {
    Region region;
    Thresholds thresholds;
    Multipliers multipliers;
    std::string notes;
};

Thresholds thresholds(const ModelParameters& p, const Schedule& s);
StabilityExponents stability_exponents(const ModelParameters& p, const Schedule& s);
Multipliers multipliers(const ModelParameters& p, const Schedule& s);

// Decision tree on exponent signs (never on ratio forms, whose sign flips
// across tau2_star): collapse when both scalar gains are <= 1; a boundary
// orbit wins when only one species persists; with both persistent, the
// lambda2/lambda4 signs separate coexistence, one-sided local stability,
// and bistability. Any deciding exponent within kExponentTol of zero
// yields Boundary.
RegimeClassification classify(const ModelParameters& p, const Schedule& s);

// Diagnostic ratios for the coexistence window:
//   lower = r*b2*c1/c2, ratio = (tau2 - tau2_star2)/(tau2 - tau2_star),
//   upper = r*c1/(b1*c2).
// The ratio is undefined at tau2 == tau2_star (ratio_defined = false, NaN).
struct ConditionRatios {
    double lower;
    double ratio;
    double upper;
    bool ratio_defined;
};

ConditionRatios condition_ratios(const ModelParameters& p, const Schedule& s);

}  // namespace seasonal
