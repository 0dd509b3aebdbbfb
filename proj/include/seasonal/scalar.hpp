#pragma once

#include <array>
#include <optional>
#include <vector>

#include "seasonal/params.hpp"

namespace seasonal {

enum class Species { U, V };

// Exponents this close to zero are treated as sitting on a threshold.
inline constexpr double kExponentTol = 1e-12;

// One-dimensional flow map x -> p*x/(q*x + 1).
//
// Every phase of the scalar subsystems has this form, and the family is
// closed under composition, so a whole season cycle reduces to a single
// (p, q) pair. p is the gain (the derivative at 0), q >= 0 the saturation.
struct MobiusGrowthMap {
    double p = 1.0;
    double q = 0.0;

    double operator()(double x) const noexcept { return p * x / (q * x + 1.0); }

    // Derivative at an arbitrary point.
    double derivative(double x) const noexcept {
        const double den = q * x + 1.0;
        return p / (den * den);
    }
};

// Map applying `first` and then `second`:
// (p2*p1, q2*p1 + q1).
MobiusGrowthMap compose(const MobiusGrowthMap& first,
                        const MobiusGrowthMap& second) noexcept;

// One phase of a scalar subsystem.
//   Decay:           x' = -rate * x
//   Logistic:        x' = rate * x * (1 - x)
//   LogisticHarvest: x' = rate * x * (1 - x) - harvest * x
struct ScalarPhase {
    enum class Kind { Decay, Logistic, LogisticHarvest };

    Kind kind;
    double rate;
    double harvest;   // meaningful for LogisticHarvest only
    double duration;

    static ScalarPhase decay(double rate, double duration);
    static ScalarPhase logistic(double rate, double duration);
    static ScalarPhase logistic_harvest(double rate, double harvest, double duration);
};

// Closed-form flow map of one phase over its duration.
// The harvest == rate case is handled by a dedicated branch (p = 1,
// q = rate*duration); the generic formula divides by rate - harvest.
MobiusGrowthMap phase_map(const ScalarPhase& phase);

// The three phases of one season cycle for the given species.
std::array<ScalarPhase, 3> season_phases(const ModelParameters& p,
                                         const Schedule& s, Species species);

// Full-period map of the scalar subsystem: the composition
// grazing-phase map o growth-phase map o dry-phase map.
MobiusGrowthMap period_map(const ModelParameters& p, const Schedule& s,
                           Species species);

// log of the full-period gain, accumulated as a plain sum of the per-phase
// exponents (no exp/log round trip). Sign decides persistence.
double period_log_gain(const ModelParameters& p, const Schedule& s,
                       Species species);

// lim_{x->0} m(x)/x, i.e. the gain p.
double map_limit_ratio(const MobiusGrowthMap& m) noexcept;

// Unique positive fixed point (p-1)/q when p > 1, absent when p <= 1.
// A map with p > 1 and q <= 0 cannot arise from a valid schedule; it is
// rejected with std::domain_error.
std::optional<double> fixed_point(const MobiusGrowthMap& m);

// Iterates x, m(x), m(m(x)), ..., n applications (n+1 values). The sequence
// is monotone toward the fixed point: strictly increasing iff m(x) > x,
// constant iff m(x) = x, strictly decreasing iff m(x) < x.
std::vector<double> iterate_sequence(const MobiusGrowthMap& m, double x, int n);

// Long-run outcome of a scalar subsystem.
struct ScalarRegime {
    enum class Label { Extinct, PersistentPeriodic };

    Label label;
    std::optional<double> fixed_point;   // present iff PersistentPeriodic
    double multiplier_at_zero;           // period-map gain
    bool boundary = false;               // gain exponent within kExponentTol of 0
};

// PersistentPeriodic iff the period-map gain exceeds 1; gain exactly at 1
// (within kExponentTol on the exponent) is reported Extinct with the
// boundary flag set.
ScalarRegime scalar_classify(const ModelParameters& p, const Schedule& s,
                             Species species);

}  // namespace seasonal
