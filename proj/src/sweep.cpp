#include "seasonal/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include "seasonal/format.hpp"

namespace seasonal {

namespace {

void apply_axis(ModelParameters& p, Schedule& s, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::Tau1: s.tau1 = value; return;
        case SweepAxis::Tau2: s.tau2 = value; return;
        case SweepAxis::C1: p.c1 = value; return;
        case SweepAxis::C2: p.c2 = value; return;
    }
}

bool schedule_admissible(const Schedule& s) {
    return s.tau1 >= 0.0 && s.tau2 >= s.tau1 && s.T >= s.tau2;
}

CellLabel classify_cell(const ModelParameters& base_p, const Schedule& base_s,
                        const GridSpec& spec, double v1, double v2) noexcept {
    ModelParameters p = base_p;
    Schedule s = base_s;
    apply_axis(p, s, spec.axis1, v1);
    apply_axis(p, s, spec.axis2, v2);
    if (!schedule_admissible(s)) {
        return CellLabel::InvalidSchedule;
    }
    try {
        return to_cell_label(classify(p, s).region);
    } catch (...) {
        return CellLabel::Failed;
    }
}

RegionGrid prepare_grid(const ModelParameters& p, const Schedule& s,
                        const GridSpec& spec) {
    RegionGrid grid;
    grid.spec = spec;
    grid.cells.assign(static_cast<size_t>(spec.n1) * spec.n2, CellLabel::Failed);
    if (spec.axis1 == SweepAxis::Tau1 && spec.axis2 == SweepAxis::Tau2) {
        grid.boundary_curves = boundary_lines(p, s, spec.min1, spec.max1, spec.n1);
    }
    return grid;
}

bool is_tau_axis(SweepAxis axis) {
    return axis == SweepAxis::Tau1 || axis == SweepAxis::Tau2;
}

void validate_axis_range(SweepAxis axis, double lo, double hi, const Schedule& s) {
    const std::string name(axis_name(axis));
    if (!(lo <= hi)) {
        throw std::invalid_argument("grid: empty range for axis " + name);
    }
    if (is_tau_axis(axis)) {
        if (lo < 0.0 || hi > s.T) {
            throw std::invalid_argument("grid: range for axis " + name +
                                        " must lie within [0, T]");
        }
    } else if (!(lo > 0.0)) {
        throw std::invalid_argument("grid: range for axis " + name +
                                    " must be strictly positive");
    }
}

}  // namespace

std::string_view axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Tau1: return "tau1";
        case SweepAxis::Tau2: return "tau2";
        case SweepAxis::C1: return "c1";
        case SweepAxis::C2: return "c2";
    }
    return "?";
}

SweepAxis axis_from_name(std::string_view name) {
    if (name == "tau1") return SweepAxis::Tau1;
    if (name == "tau2") return SweepAxis::Tau2;
    if (name == "c1") return SweepAxis::C1;
    if (name == "c2") return SweepAxis::C2;
    throw std::invalid_argument("unknown sweep axis \"" + std::string(name) +
                                "\" (expected tau1, tau2, c1 or c2)");
}

CellLabel to_cell_label(Region r) {
    return static_cast<CellLabel>(region_code(r));
}

std::string_view cell_label_name(CellLabel label) {
    switch (label) {
        case CellLabel::Failed: return "Failed";
        case CellLabel::InvalidSchedule: return "InvalidSchedule";
        case CellLabel::Boundary: return "Boundary";
        case CellLabel::I_Collapse: return "I_Collapse";
        case CellLabel::II_UWins: return "II_UWins";
        case CellLabel::III_VWins: return "III_VWins";
        case CellLabel::IV_Coexist: return "IV_Coexist";
        case CellLabel::V_ULAS_Unresolved: return "V_ULAS_Unresolved";
        case CellLabel::VI_VLAS_Unresolved: return "VI_VLAS_Unresolved";
        case CellLabel::VII_Bistable: return "VII_Bistable";
    }
    return "?";
}

double RegionGrid::center1(int i) const {
    return spec.min1 + (i + 0.5) * (spec.max1 - spec.min1) / spec.n1;
}

double RegionGrid::center2(int j) const {
    return spec.min2 + (j + 0.5) * (spec.max2 - spec.min2) / spec.n2;
}

void validate_grid_spec(const GridSpec& spec, const ModelParameters& p,
                        const Schedule& s) {
    (void)p;
    if (spec.n1 < 2 || spec.n2 < 2) {
        throw std::invalid_argument("grid: n1 and n2 must be at least 2");
    }
    if (spec.axis1 == spec.axis2) {
        throw std::invalid_argument("grid: axis1 and axis2 must differ");
    }
    validate_axis_range(spec.axis1, spec.min1, spec.max1, s);
    validate_axis_range(spec.axis2, spec.min2, spec.max2, s);
}

RegionGrid sweep_regions_serial(const ModelParameters& p, const Schedule& s,
                                const GridSpec& spec) {
    validate_grid_spec(spec, p, s);
    RegionGrid grid = prepare_grid(p, s, spec);
    for (int j = 0; j < spec.n2; ++j) {
        for (int i = 0; i < spec.n1; ++i) {
            grid.cells[static_cast<size_t>(j) * spec.n1 + i] =
                classify_cell(p, s, spec, grid.center1(i), grid.center2(j));
        }
    }
    return grid;
}

RegionGrid sweep_regions(const ModelParameters& p, const Schedule& s,
                         const GridSpec& spec) {
    validate_grid_spec(spec, p, s);
    RegionGrid grid = prepare_grid(p, s, spec);
    const int n1 = spec.n1;
    const int n2 = spec.n2;
    CellLabel* cells = grid.cells.data();
#pragma omp parallel for collapse(2) schedule(static)
    for (int j = 0; j < n2; ++j) {
        for (int i = 0; i < n1; ++i) {
            cells[static_cast<size_t>(j) * n1 + i] =
                classify_cell(p, s, spec, grid.center1(i), grid.center2(j));
        }
    }
    return grid;
}

std::vector<BoundaryLine> boundary_lines(const ModelParameters& p,
                                         const Schedule& s, double tau1_min,
                                         double tau1_max, int samples) {
    samples = std::max(samples, 2);

    // tau2_star(tau1) = A1 + B1*tau1, tau2_star2(tau1) = A2 + B2*tau1.
    const double A1 = (p.c1 - 1.0) * s.T / p.c1;
    const double B1 = (p.d1 + 1.0) / p.c1;
    const double A2 = (p.c2 - p.r) * s.T / p.c2;
    const double B2 = (p.d2 + p.r) / p.c2;

    struct Line {
        const char* label;
        double A, B;
        bool ok;
    };
    std::vector<Line> lines;
    lines.push_back({"tau2_star", A1, B1, true});
    lines.push_back({"tau2_star2", A2, B2, true});

    // lambda2 = 1: tau2*(c2 - r*b2*c1) = c2*tau2_star2 - r*b2*c1*tau2_star.
    {
        const double k = p.r * p.b2 * p.c1;
        const double den = p.c2 - k;
        const bool ok = std::abs(den) > 1e-14 * (p.c2 + k);
        lines.push_back({"lambda2_unit", ok ? (p.c2 * A2 - k * A1) / den : 0.0,
                         ok ? (p.c2 * B2 - k * B1) / den : 0.0, ok});
    }
    // lambda4 = 1: tau2*(c1 - b1*c2/r) = c1*tau2_star - (b1*c2/r)*tau2_star2.
    {
        const double k = p.b1 * p.c2 / p.r;
        const double den = p.c1 - k;
        const bool ok = std::abs(den) > 1e-14 * (p.c1 + k);
        lines.push_back({"lambda4_unit", ok ? (p.c1 * A1 - k * A2) / den : 0.0,
                         ok ? (p.c1 * B1 - k * B2) / den : 0.0, ok});
    }

    std::vector<BoundaryLine> out;
    for (const Line& line : lines) {
        if (!line.ok) continue;
        BoundaryLine poly;
        poly.label = line.label;
        poly.points.reserve(samples);
        for (int i = 0; i < samples; ++i) {
            const double tau1 =
                tau1_min + i * (tau1_max - tau1_min) / (samples - 1);
            poly.points.push_back({tau1, line.A + line.B * tau1});
        }
        out.push_back(std::move(poly));
    }
    return out;
}

void write_grid_csv(const RegionGrid& grid, std::ostream& out) {
    for (int j = 0; j < grid.spec.n2; ++j) {
        for (int i = 0; i < grid.spec.n1; ++i) {
            if (i > 0) out << ',';
            out << static_cast<int>(grid.at(i, j));
        }
        out << '\n';
    }
}

namespace {

bool label_auditable(CellLabel label) {
    switch (label) {
        case CellLabel::I_Collapse:
        case CellLabel::II_UWins:
        case CellLabel::III_VWins:
        case CellLabel::IV_Coexist:
        case CellLabel::VII_Bistable:
            return true;
        default:
            return false;
    }
}

// Empty string means the observed long-run behavior matches the label.
std::string check_outcome(CellLabel label,
                          const std::optional<PeriodicOrbit>& orbit) {
    constexpr double tol = 1e-6;
    const auto describe = [](const State& fp) {
        return "fixed point (" + format_number(fp.u) + ", " + format_number(fp.v) + ")";
    };
    if (label == CellLabel::I_Collapse) {
        if (!orbit) return {};
        return "expected collapse to the origin, found " + describe(orbit->fixed_point);
    }
    if (!orbit) {
        return "expected a periodic orbit, orbit collapsed to the origin";
    }
    const State& fp = orbit->fixed_point;
    switch (label) {
        case CellLabel::II_UWins:
            if (fp.u > tol && fp.v < tol) return {};
            return "expected (x0, 0), found " + describe(fp);
        case CellLabel::III_VWins:
            if (fp.v > tol && fp.u < tol) return {};
            return "expected (0, y0), found " + describe(fp);
        case CellLabel::IV_Coexist:
            if (fp.u > tol && fp.v > tol) return {};
            return "expected an interior fixed point, found " + describe(fp);
        case CellLabel::VII_Bistable:
            if ((fp.u < tol) != (fp.v < tol)) return {};
            return "expected a boundary attractor, found " + describe(fp);
        default:
            return {};
    }
}

}  // namespace

AuditReport audit_grid(const RegionGrid& grid, const ModelParameters& p,
                       const Schedule& s, const AuditOptions& opts) {
    AuditReport report;
    if (opts.cells <= 0) {
        return report;
    }

    // Choose distinct auditable cells up front so the parallel phase is a
    // plain slot-indexed map.
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> pick_i(0, grid.spec.n1 - 1);
    std::uniform_int_distribution<int> pick_j(0, grid.spec.n2 - 1);
    std::vector<std::pair<int, int>> chosen;
    const long attempts_cap = 50L * opts.cells + 1000;
    for (long attempt = 0;
         attempt < attempts_cap && static_cast<int>(chosen.size()) < opts.cells;
         ++attempt) {
        const int i = pick_i(rng);
        const int j = pick_j(rng);
        if (std::find(chosen.begin(), chosen.end(), std::make_pair(i, j)) !=
            chosen.end()) {
            continue;
        }
        if (!label_auditable(grid.at(i, j))) {
            ++report.cells_skipped;
            continue;
        }
        chosen.emplace_back(i, j);
    }
    report.cells_checked = static_cast<int>(chosen.size());

    std::vector<std::string> outcomes(chosen.size());
    const int count = static_cast<int>(chosen.size());
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < count; ++idx) {
        const auto [i, j] = chosen[static_cast<size_t>(idx)];
        ModelParameters pc = p;
        Schedule sc = s;
        apply_axis(pc, sc, grid.spec.axis1, grid.center1(i));
        apply_axis(pc, sc, grid.spec.axis2, grid.center2(j));
        try {
            const auto orbit = find_periodic_orbit(pc, sc, State{0.5, 0.5}, opts.orbit);
            outcomes[static_cast<size_t>(idx)] = check_outcome(grid.at(i, j), orbit);
        } catch (const std::exception& e) {
            outcomes[static_cast<size_t>(idx)] = e.what();
        }
    }

    for (int idx = 0; idx < count; ++idx) {
        if (outcomes[static_cast<size_t>(idx)].empty()) continue;
        const auto [i, j] = chosen[static_cast<size_t>(idx)];
        report.mismatches.push_back(
            {i, j, grid.at(i, j), outcomes[static_cast<size_t>(idx)]});
    }
    return report;
}

}  // namespace seasonal
