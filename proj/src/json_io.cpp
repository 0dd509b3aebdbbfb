#include "seasonal/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "seasonal/format.hpp"

namespace seasonal {

namespace {

using nlohmann::ordered_json;

bool is_scalar(const ordered_json& j) {
    return !j.is_object() && !j.is_array();
}

void write_scalar(std::ostream& out, const ordered_json& j) {
    if (j.is_number_float()) {
        const double value = j.get<double>();
        if (std::isfinite(value)) {
            out << format_number(value);
        } else {
            out << "null";  // JSON has no inf/nan
        }
    } else {
        out << j.dump();  // strings (escaped), integers, booleans, null
    }
}

void write_value(std::ostream& out, const ordered_json& j, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out << ",\n";
            first = false;
            out << pad_in << ordered_json(key).dump() << ": ";
            write_value(out, value, indent, depth + 1);
        }
        out << '\n' << pad << '}';
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            out << "[]";
            return;
        }
        const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
        if (flat) {
            out << '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out << ", ";
                first = false;
                write_scalar(out, value);
            }
            out << ']';
            return;
        }
        out << "[\n";
        bool first = true;
        for (const auto& value : j) {
            if (!first) out << ",\n";
            first = false;
            out << pad_in;
            write_value(out, value, indent, depth + 1);
        }
        out << '\n' << pad << ']';
        return;
    }
    write_scalar(out, j);
}

}  // namespace

void write_json(std::ostream& out, const ordered_json& j, int indent) {
    write_value(out, j, indent, 0);
}

std::string dump_json(const ordered_json& j, int indent) {
    std::ostringstream out;
    write_json(out, j, indent);
    return out.str();
}

void expect_object(const nlohmann::json& j, std::string_view context) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(context) +
                                    ": expected a JSON object");
    }
}

void reject_unknown_keys(const nlohmann::json& j,
                         std::initializer_list<std::string_view> allowed,
                         std::string_view context) {
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw std::invalid_argument(std::string(context) + ": unknown key \"" +
                                        item.key() + "\"");
        }
    }
}

double require_number(const nlohmann::json& j, std::string_view key,
                      std::string_view context) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string(context) + ": missing key \"" +
                                    std::string(key) + "\"");
    }
    if (!it->is_number()) {
        throw std::invalid_argument(std::string(context) + ": key \"" +
                                    std::string(key) + "\" must be a number");
    }
    return it->get<double>();
}

ModelParameters model_parameters_from_json(const nlohmann::json& j) {
    static constexpr std::string_view ctx = "parameters";
    expect_object(j, ctx);
    reject_unknown_keys(j, {"d1", "d2", "r", "b1", "b2", "c1", "c2"}, ctx);
    ModelParameters p;
    p.d1 = require_number(j, "d1", ctx);
    p.d2 = require_number(j, "d2", ctx);
    p.r = require_number(j, "r", ctx);
    p.b1 = require_number(j, "b1", ctx);
    p.b2 = require_number(j, "b2", ctx);
    p.c1 = require_number(j, "c1", ctx);
    p.c2 = require_number(j, "c2", ctx);
    return p;
}

Schedule schedule_from_json(const nlohmann::json& j) {
    static constexpr std::string_view ctx = "schedule";
    expect_object(j, ctx);
    reject_unknown_keys(j, {"tau1", "tau2", "T"}, ctx);
    Schedule s;
    s.tau1 = require_number(j, "tau1", ctx);
    s.tau2 = require_number(j, "tau2", ctx);
    s.T = require_number(j, "T", ctx);
    return s;
}

RawParameters raw_parameters_from_json(const nlohmann::json& j) {
    static constexpr std::string_view ctx = "raw_parameters";
    expect_object(j, ctx);
    reject_unknown_keys(j,
                        {"r1", "r2", "K1", "K2", "b1_raw", "b2_raw", "d1_raw",
                         "d2_raw", "q1E1", "q2E2", "tau1_raw", "tau2_raw", "T_raw"},
                        ctx);
    RawParameters raw;
    raw.r1 = require_number(j, "r1", ctx);
    raw.r2 = require_number(j, "r2", ctx);
    raw.K1 = require_number(j, "K1", ctx);
    raw.K2 = require_number(j, "K2", ctx);
    raw.b1_raw = require_number(j, "b1_raw", ctx);
    raw.b2_raw = require_number(j, "b2_raw", ctx);
    raw.d1_raw = require_number(j, "d1_raw", ctx);
    raw.d2_raw = require_number(j, "d2_raw", ctx);
    raw.q1E1 = require_number(j, "q1E1", ctx);
    raw.q2E2 = require_number(j, "q2E2", ctx);
    raw.tau1_raw = require_number(j, "tau1_raw", ctx);
    raw.tau2_raw = require_number(j, "tau2_raw", ctx);
    raw.T_raw = require_number(j, "T_raw", ctx);
    return raw;
}

ordered_json to_json(const ModelParameters& p) {
    return ordered_json{{"d1", p.d1}, {"d2", p.d2}, {"r", p.r}, {"b1", p.b1},
                        {"b2", p.b2}, {"c1", p.c1}, {"c2", p.c2}};
}

ordered_json to_json(const Schedule& s) {
    return ordered_json{{"tau1", s.tau1}, {"tau2", s.tau2}, {"T", s.T}};
}

ordered_json to_json(const State& state) {
    return ordered_json{{"u", state.u}, {"v", state.v}};
}

ordered_json to_json(const Thresholds& t) {
    return ordered_json{{"tau1_star", t.tau1_star},
                        {"tau1_star2", t.tau1_star2},
                        {"tau2_star", t.tau2_star},
                        {"tau2_star2", t.tau2_star2}};
}

ordered_json to_json(const Multipliers& m) {
    return ordered_json{{"lambda1", m.lambda1}, {"lambda2", m.lambda2},
                        {"lambda3", m.lambda3}, {"lambda4", m.lambda4},
                        {"lambda5", m.lambda5}, {"lambda6", m.lambda6}};
}

ordered_json to_json(const RegimeClassification& c) {
    ordered_json j;
    j["region"] = std::string(region_name(c.region));
    j["thresholds"] = to_json(c.thresholds);
    j["multipliers"] = to_json(c.multipliers);
    j["notes"] = c.notes;
    return j;
}

ordered_json grid_sidecar(const RegionGrid& grid) {
    ordered_json j;
    j["axis1"] = std::string(axis_name(grid.spec.axis1));
    j["axis2"] = std::string(axis_name(grid.spec.axis2));
    j["range1"] = ordered_json::array({grid.spec.min1, grid.spec.max1});
    j["range2"] = ordered_json::array({grid.spec.min2, grid.spec.max2});
    j["n1"] = grid.spec.n1;
    j["n2"] = grid.spec.n2;
    j["layout"] = "rows: axis2 ascending; columns: axis1 ascending";

    ordered_json codes;
    for (const CellLabel label :
         {CellLabel::Failed, CellLabel::InvalidSchedule, CellLabel::Boundary,
          CellLabel::I_Collapse, CellLabel::II_UWins, CellLabel::III_VWins,
          CellLabel::IV_Coexist, CellLabel::V_ULAS_Unresolved,
          CellLabel::VI_VLAS_Unresolved, CellLabel::VII_Bistable}) {
        codes[std::to_string(static_cast<int>(label))] =
            std::string(cell_label_name(label));
    }
    j["codes"] = codes;

    ordered_json lines = ordered_json::array();
    for (const BoundaryLine& line : grid.boundary_curves) {
        ordered_json entry;
        entry["label"] = line.label;
        ordered_json pts = ordered_json::array();
        for (const auto& pt : line.points) {
            pts.push_back(ordered_json::array({pt[0], pt[1]}));
        }
        entry["points"] = pts;
        lines.push_back(entry);
    }
    j["boundary_lines"] = lines;
    return j;
}

}  // namespace seasonal
