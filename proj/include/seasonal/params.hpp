#pragma once

#include <string>
#include <utility>
#include <vector>

namespace seasonal {

// Dimensional inputs of the three-phase season cycle (dry / growth / grazing).
struct RawParameters {
    double r1, r2;              // intrinsic growth rates (1/time)
    double K1, K2;              // carrying capacities (density)
    double b1_raw, b2_raw;      // competition coefficients (1/density)
    double d1_raw, d2_raw;      // dry-season mortality rates (1/time)
    double q1E1, q2E2;          // grazing intensities (1/time)
    double tau1_raw, tau2_raw, T_raw;  // phase times (time)
};

// Nondimensional parameter set. Time is measured in units of 1/r1 and both
// densities relative to their carrying capacities, so species 1 has unit
// growth rate and unit carrying capacity.
struct ModelParameters {
    double d1, d2;   // dry-season decay rates
    double r;        // growth-rate ratio r2/r1
    double b1, b2;   // competition coefficients
    double c1, c2;   // grazing intensities
};

// Phase boundaries of one season cycle: dry on (0, tau1], growth on
// (tau1, tau2], grazing on (tau2, T].
struct Schedule {
    double tau1;
    double tau2;
    double T;
};

struct ValidationIssue {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool ok() const noexcept { return errors.empty(); }
    std::string summary() const;  // "field: message" lines joined with "; "
};

ValidationReport validate(const RawParameters& raw);

// Empty report iff valid. Degenerate schedules (tau1 == tau2, tau2 == T) are
// warnings, not errors.
ValidationReport validate(const ModelParameters& p, const Schedule& s);

// Nondimensionalization: r = r2/r1, b1 = b1_raw*K2, b2 = b2_raw*K1,
// c_i = q_iE_i/r1, d_i = d_i_raw/r1, times multiplied by r1.
// Throws std::invalid_argument when raw violates its invariants.
std::pair<ModelParameters, Schedule> rescale(const RawParameters& raw);

// Inverse of rescale given the scale factors that rescale quotients out.
RawParameters unrescale(const ModelParameters& p, const Schedule& s,
                        double r1, double K1, double K2);

}  // namespace seasonal
