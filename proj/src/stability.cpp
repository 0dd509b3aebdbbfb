#include "seasonal/stability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "seasonal/scalar.hpp"

namespace seasonal {

std::string_view region_name(Region r) {
    switch (r) {
        case Region::I_Collapse: return "I_Collapse";
        case Region::II_UWins: return "II_UWins";
        case Region::III_VWins: return "III_VWins";
        case Region::IV_Coexist: return "IV_Coexist";
        case Region::V_ULAS_Unresolved: return "V_ULAS_Unresolved";
        case Region::VI_VLAS_Unresolved: return "VI_VLAS_Unresolved";
        case Region::VII_Bistable: return "VII_Bistable";
        case Region::Boundary: return "Boundary";
    }
    return "?";
}

int region_code(Region r) {
    switch (r) {
        case Region::Boundary: return 0;
        case Region::I_Collapse: return 1;
        case Region::II_UWins: return 2;
        case Region::III_VWins: return 3;
        case Region::IV_Coexist: return 4;
        case Region::V_ULAS_Unresolved: return 5;
        case Region::VI_VLAS_Unresolved: return 6;
        case Region::VII_Bistable: return 7;
    }
    return -1;
}

Thresholds thresholds(const ModelParameters& p, const Schedule& s) {
    Thresholds t;
    t.tau1_star = s.T / (p.d1 + 1.0);
    t.tau1_star2 = p.r * s.T / (p.d2 + p.r);
    t.tau2_star = ((p.d1 + 1.0) * s.tau1 + (p.c1 - 1.0) * s.T) / p.c1;
    t.tau2_star2 = ((p.d2 + p.r) * s.tau1 + (p.c2 - p.r) * s.T) / p.c2;
    return t;
}

StabilityExponents stability_exponents(const ModelParameters& p, const Schedule& s) {
    StabilityExponents e;
    e.u_gain = period_log_gain(p, s, Species::U);
    e.v_gain = period_log_gain(p, s, Species::V);
    e.lambda2 = e.v_gain - p.r * p.b2 * e.u_gain;
    e.lambda4 = e.u_gain - (p.b1 / p.r) * e.v_gain;
    return e;
}

Multipliers multipliers(const ModelParameters& p, const Schedule& s) {
    const StabilityExponents e = stability_exponents(p, s);
    Multipliers m;
    m.lambda5 = std::exp(e.u_gain);
    m.lambda6 = std::exp(e.v_gain);
    m.lambda1 = 1.0 / m.lambda5;
    m.lambda3 = 1.0 / m.lambda6;
    m.lambda2 = std::exp(e.lambda2);
    m.lambda4 = std::exp(e.lambda4);
    return m;
}

RegimeClassification classify(const ModelParameters& p, const Schedule& s) {
    RegimeClassification out;
    out.thresholds = thresholds(p, s);
    out.multipliers = multipliers(p, s);

    const StabilityExponents e = stability_exponents(p, s);
    const double tol = kExponentTol;

    if (std::abs(e.u_gain) <= tol || std::abs(e.v_gain) <= tol) {
        out.region = Region::Boundary;
        out.notes = std::abs(e.u_gain) <= tol
                        ? "scalar gain of u sits on its persistence threshold"
                        : "scalar gain of v sits on its persistence threshold";
        return out;
    }

    const bool u_persists = e.u_gain > 0.0;
    const bool v_persists = e.v_gain > 0.0;

    if (!u_persists && !v_persists) {
        out.region = Region::I_Collapse;
        out.notes = "both scalar period-map gains are below 1; "
                    "every orbit collapses to the origin";
        return out;
    }
    if (u_persists && !v_persists) {
        out.region = Region::II_UWins;
        out.notes = "u persists while v cannot (gain <= 1 even without competition); "
                    "the boundary orbit (u*(t), 0) attracts the interior";
        return out;
    }
    if (!u_persists && v_persists) {
        out.region = Region::III_VWins;
        out.notes = "v persists while u cannot (gain <= 1 even without competition); "
                    "the boundary orbit (0, v*(t)) attracts the interior";
        return out;
    }

    // Both species persist alone; the lambda2/lambda4 signs decide.
    if (std::abs(e.lambda2) <= tol || std::abs(e.lambda4) <= tol) {
        out.region = Region::Boundary;
        out.notes = std::abs(e.lambda2) <= tol
                        ? "lambda2 sits on the unit circle"
                        : "lambda4 sits on the unit circle";
        return out;
    }
    const bool u_orbit_stable = e.lambda2 < 0.0;   // lambda2 < 1
    const bool v_orbit_stable = e.lambda4 < 0.0;   // lambda4 < 1
    if (!u_orbit_stable && !v_orbit_stable) {
        out.region = Region::IV_Coexist;
        out.notes = "both boundary orbits are unstable under weak competition "
                    "(b1*b2 < 1); a unique positive periodic orbit attracts the interior";
        return out;
    }
    if (u_orbit_stable && v_orbit_stable) {
        out.region = Region::VII_Bistable;
        out.notes = "both boundary orbits are locally stable (lambda2 < 1, lambda4 < 1); "
                    "the outcome depends on the initial state";
        return out;
    }
    if (u_orbit_stable) {
        out.region = Region::V_ULAS_Unresolved;
        out.notes = "(u*(t), 0) is locally stable (lambda2 < 1) and (0, v*(t)) is "
                    "unstable, but no global conclusion is available";
        return out;
    }
    out.region = Region::VI_VLAS_Unresolved;
    out.notes = "(0, v*(t)) is locally stable (lambda4 < 1) and (u*(t), 0) is "
                "unstable, but no global conclusion is available";
    return out;
}

ConditionRatios condition_ratios(const ModelParameters& p, const Schedule& s) {
    const Thresholds t = thresholds(p, s);
    ConditionRatios cr;
    cr.lower = p.r * p.b2 * p.c1 / p.c2;
    cr.upper = p.r * p.c1 / (p.b1 * p.c2);
    const double den = s.tau2 - t.tau2_star;
    cr.ratio_defined = den != 0.0;
    cr.ratio = cr.ratio_defined ? (s.tau2 - t.tau2_star2) / den
                                : std::numeric_limits<double>::quiet_NaN();
    return cr;
}

}  // namespace seasonal
