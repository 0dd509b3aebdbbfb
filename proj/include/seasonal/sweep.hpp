#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seasonal/integrator.hpp"
#include "seasonal/stability.hpp"

namespace seasonal {

enum class SweepAxis { Tau1, Tau2, C1, C2 };

std::string_view axis_name(SweepAxis axis);
SweepAxis axis_from_name(std::string_view name);  // throws std::invalid_argument

struct GridSpec {
    SweepAxis axis1 = SweepAxis::Tau1;
    SweepAxis axis2 = SweepAxis::Tau2;
    double min1 = 0.0, max1 = 0.0;
    double min2 = 0.0, max2 = 0.0;
    int n1 = 200, n2 = 200;
};

// Region codes extended with per-cell outcomes that are not classifications.
enum class CellLabel : int {
    Failed = -2,
    InvalidSchedule = -1,
    Boundary = 0,
    I_Collapse = 1,
    II_UWins = 2,
    III_VWins = 3,
    IV_Coexist = 4,
    V_ULAS_Unresolved = 5,
    VI_VLAS_Unresolved = 6,
    VII_Bistable = 7,
};

CellLabel to_cell_label(Region r);
std::string_view cell_label_name(CellLabel label);

struct BoundaryLine {
    std::string label;
    std::vector<std::array<double, 2>> points;  // (tau1, tau2)
};

struct RegionGrid {
    GridSpec spec;
    std::vector<CellLabel> cells;  // row-major: cells[j * n1 + i]
    std::vector<BoundaryLine> boundary_curves;

    CellLabel at(int i, int j) const { return cells[static_cast<size_t>(j) * spec.n1 + i]; }
    double center1(int i) const;
    double center2(int j) const;
};

// Throws std::invalid_argument: n1, n2 >= 2; tau ranges within [0, T];
// c ranges strictly positive.
void validate_grid_spec(const GridSpec& spec, const ModelParameters& p,
                        const Schedule& s);

// Classifies every cell at its center with the two swept parameters
// overridden. Cells whose schedule violates tau1 <= tau2 <= T are labeled
// InvalidSchedule; a per-cell failure becomes Failed, never an abort.
// Cells are independent; the parallel kernel writes each into its own slot,
// so the output is identical to the serial reference for any thread count.
RegionGrid sweep_regions(const ModelParameters& p, const Schedule& s,
                         const GridSpec& spec);
RegionGrid sweep_regions_serial(const ModelParameters& p, const Schedule& s,
                                const GridSpec& spec);

// The four closed-form loci in the tau1-tau2 plane, each sampled at
// `samples` points over [tau1_min, tau1_max]:
//   tau2_star(tau1), tau2_star2(tau1)  - persistence thresholds
//   lambda2 = 1, lambda4 = 1           - boundary-orbit stability changes
// The unit-multiplier lines are omitted when degenerate (slope denominator
// ~ 0: c2 = r*b2*c1, resp. r*c1 = b1*c2).
std::vector<BoundaryLine> boundary_lines(const ModelParameters& p,
                                         const Schedule& s, double tau1_min,
                                         double tau1_max, int samples);

// Matrix of integer region codes, axis2 ascending by row, axis1 ascending
// by column.
void write_grid_csv(const RegionGrid& grid, std::ostream& out);

struct AuditOptions {
    int cells = 0;
    unsigned seed = 1;
    OrbitOptions orbit{};
};

struct AuditMismatch {
    int i, j;
    CellLabel label;
    std::string observed;
};

// Cross-checks sampled cell labels against find_periodic_orbit outcomes.
// Cells labeled V/VI/Boundary make no testable global claim and are skipped.
struct AuditReport {
    int cells_checked = 0;
    int cells_skipped = 0;
    std::vector<AuditMismatch> mismatches;
};

AuditReport audit_grid(const RegionGrid& grid, const ModelParameters& p,
                       const Schedule& s, const AuditOptions& opts);

}  // namespace seasonal
