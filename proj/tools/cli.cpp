#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "seasonal/integrator.hpp"
#include "seasonal/json_io.hpp"
#include "seasonal/params.hpp"
#include "seasonal/scalar.hpp"
#include "seasonal/stability.hpp"
#include "seasonal/sweep.hpp"

namespace seasonal::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    ModelParameters params{};
    Schedule schedule{};
    std::optional<State> initial_state;
    std::optional<int> periods;
    std::optional<Species> species;
    std::optional<GridSpec> grid;
    std::optional<std::string> output;
    int sample_stride = 1;
    int audit_cells = 0;
};

int require_int(const json& j, std::string_view key, std::string_view ctx) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer()) {
        throw ConfigError(std::string(ctx) + ": key \"" + std::string(key) +
                          "\" must be an integer");
    }
    return it->get<int>();
}

std::string require_string(const json& j, std::string_view key,
                           std::string_view ctx) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
        throw ConfigError(std::string(ctx) + ": key \"" + std::string(key) +
                          "\" must be a string");
    }
    return it->get<std::string>();
}

Species parse_species(const std::string& name) {
    if (name == "u" || name == "U") return Species::U;
    if (name == "v" || name == "V") return Species::V;
    throw ConfigError("species: expected \"u\" or \"v\", got \"" + name + "\"");
}

std::array<double, 2> parse_range(const json& j, std::string_view key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_array() || it->size() != 2 ||
        !(*it)[0].is_number() || !(*it)[1].is_number()) {
        throw ConfigError("grid: key \"" + std::string(key) +
                          "\" must be an array of two numbers");
    }
    return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

GridSpec parse_grid(const json& j, const Schedule& s) {
    expect_object(j, "grid");
    reject_unknown_keys(
        j, {"axis1", "axis2", "range1", "range2", "n1", "n2"}, "grid");
    GridSpec spec;
    spec.axis1 = j.contains("axis1") ? axis_from_name(require_string(j, "axis1", "grid"))
                                     : SweepAxis::Tau1;
    spec.axis2 = j.contains("axis2") ? axis_from_name(require_string(j, "axis2", "grid"))
                                     : SweepAxis::Tau2;
    const auto default_range = [&](SweepAxis axis) -> std::array<double, 2> {
        switch (axis) {
            case SweepAxis::Tau1:
            case SweepAxis::Tau2:
                return {0.0, s.T};
            default:
                return {0.1, 2.0};
        }
    };
    const auto r1 = j.contains("range1") ? parse_range(j, "range1")
                                         : default_range(spec.axis1);
    const auto r2 = j.contains("range2") ? parse_range(j, "range2")
                                         : default_range(spec.axis2);
    spec.min1 = r1[0];
    spec.max1 = r1[1];
    spec.min2 = r2[0];
    spec.max2 = r2[1];
    if (j.contains("n1")) spec.n1 = require_int(j, "n1", "grid");
    if (j.contains("n2")) spec.n2 = require_int(j, "n2", "grid");
    return spec;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file \"" + path + "\"");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    expect_object(j, "config");
    reject_unknown_keys(j,
                        {"parameters", "schedule", "raw_parameters",
                         "initial_state", "periods", "species", "grid",
                         "output", "sample_stride", "audit_cells"},
                        "config");

    RunConfig cfg;
    const bool has_raw = j.contains("raw_parameters");
    const bool has_model = j.contains("parameters") || j.contains("schedule");
    if (has_raw && has_model) {
        throw ConfigError("config: provide either \"raw_parameters\" or "
                          "\"parameters\" + \"schedule\", not both");
    }
    if (has_raw) {
        const RawParameters raw = raw_parameters_from_json(j.at("raw_parameters"));
        std::tie(cfg.params, cfg.schedule) = rescale(raw);
    } else {
        if (!j.contains("parameters")) {
            throw ConfigError("config: missing key \"parameters\"");
        }
        if (!j.contains("schedule")) {
            throw ConfigError("config: missing key \"schedule\"");
        }
        cfg.params = model_parameters_from_json(j.at("parameters"));
        cfg.schedule = schedule_from_json(j.at("schedule"));
    }

    if (j.contains("initial_state")) {
        const json& st = j.at("initial_state");
        expect_object(st, "initial_state");
        reject_unknown_keys(st, {"u", "v"}, "initial_state");
        cfg.initial_state = State{require_number(st, "u", "initial_state"),
                                  require_number(st, "v", "initial_state")};
    }
    if (j.contains("periods")) {
        cfg.periods = require_int(j, "periods", "config");
    }
    if (j.contains("species")) {
        cfg.species = parse_species(require_string(j, "species", "config"));
    }
    if (j.contains("grid")) {
        cfg.grid = parse_grid(j.at("grid"), cfg.schedule);
    }
    if (j.contains("output")) {
        cfg.output = require_string(j, "output", "config");
    }
    if (j.contains("sample_stride")) {
        cfg.sample_stride = require_int(j, "sample_stride", "config");
    }
    if (j.contains("audit_cells")) {
        cfg.audit_cells = require_int(j, "audit_cells", "config");
    }
    return cfg;
}

void check_model(const RunConfig& cfg) {
    const ValidationReport report = validate(cfg.params, cfg.schedule);
    if (!report.ok()) {
        throw ConfigError("invalid parameters: " + report.summary());
    }
}

void emit(std::ostream& out, const ordered_json& doc) {
    write_json(out, doc);
    out << '\n';
}

ordered_json header_json(const RunConfig& cfg) {
    ordered_json doc;
    doc["parameters"] = to_json(cfg.params);
    doc["schedule"] = to_json(cfg.schedule);
    return doc;
}

int cmd_thresholds(const RunConfig& cfg, std::ostream& out) {
    ordered_json doc = header_json(cfg);
    doc["thresholds"] = to_json(thresholds(cfg.params, cfg.schedule));
    emit(out, doc);
    return 0;
}

int cmd_multipliers(const RunConfig& cfg, std::ostream& out) {
    ordered_json doc = header_json(cfg);
    doc["multipliers"] = to_json(multipliers(cfg.params, cfg.schedule));
    emit(out, doc);
    return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const RegimeClassification rc = classify(cfg.params, cfg.schedule);
    ordered_json doc = header_json(cfg);
    const ordered_json body = to_json(rc);
    for (const auto& [key, value] : body.items()) {
        doc[key] = value;
    }
    emit(out, doc);
    return 0;
}

int cmd_fixed_point(const RunConfig& cfg, std::ostream& out) {
    const Species species = cfg.species.value_or(Species::U);
    const ScalarRegime regime = scalar_classify(cfg.params, cfg.schedule, species);
    ordered_json doc = header_json(cfg);
    doc["species"] = species == Species::U ? "u" : "v";
    doc["label"] = regime.label == ScalarRegime::Label::PersistentPeriodic
                       ? "PersistentPeriodic"
                       : "Extinct";
    doc["multiplier_at_zero"] = regime.multiplier_at_zero;
    if (regime.fixed_point) {
        doc["fixed_point"] = *regime.fixed_point;
    } else {
        doc["fixed_point"] = nullptr;
    }
    doc["boundary"] = regime.boundary;
    emit(out, doc);
    return 0;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path);
    if (!file) {
        throw ConfigError("cannot open output file \"" + path + "\"");
    }
    return file;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.initial_state) {
        throw ConfigError("config: missing key \"initial_state\" (required by simulate)");
    }
    if (!cfg.periods) {
        throw ConfigError("config: missing key \"periods\" (required by simulate)");
    }
    if (!cfg.output) {
        throw ConfigError("simulate: no output path (set \"output\" or pass --out)");
    }
    if (cfg.sample_stride < 1) {
        throw ConfigError("config: \"sample_stride\" must be at least 1");
    }
    const Trajectory traj = simulate(cfg.params, cfg.schedule, *cfg.initial_state,
                                     *cfg.periods, cfg.sample_stride);
    {
        std::ofstream file = open_output(*cfg.output);
        write_csv(traj, file);
    }
    ordered_json doc = header_json(cfg);
    doc["initial_state"] = to_json(*cfg.initial_state);
    doc["periods"] = *cfg.periods;
    doc["samples"] = traj.samples.size();
    doc["final_state"] = to_json(traj.samples.back().state);
    doc["output"] = *cfg.output;
    emit(out, doc);
    return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.output) {
        throw ConfigError("sweep: no output path (set \"output\" or pass --out)");
    }
    GridSpec spec;
    if (cfg.grid) {
        spec = *cfg.grid;
    } else {
        spec.min1 = 0.0;
        spec.max1 = cfg.schedule.T;
        spec.min2 = 0.0;
        spec.max2 = cfg.schedule.T;
    }
    const RegionGrid grid = sweep_regions(cfg.params, cfg.schedule, spec);

    {
        std::ofstream file = open_output(*cfg.output);
        write_grid_csv(grid, file);
    }
    const std::string sidecar_path = *cfg.output + ".json";
    {
        std::ofstream file = open_output(sidecar_path);
        write_json(file, grid_sidecar(grid));
        file << '\n';
    }

    ordered_json doc = header_json(cfg);
    doc["grid"] = ordered_json{{"axis1", std::string(axis_name(spec.axis1))},
                               {"axis2", std::string(axis_name(spec.axis2))},
                               {"range1", ordered_json::array({spec.min1, spec.max1})},
                               {"range2", ordered_json::array({spec.min2, spec.max2})},
                               {"n1", spec.n1},
                               {"n2", spec.n2}};
    doc["output"] = *cfg.output;
    doc["sidecar"] = sidecar_path;

    std::vector<std::string> labels;
    for (const CellLabel label : grid.cells) {
        const std::string name(cell_label_name(label));
        if (std::find(labels.begin(), labels.end(), name) == labels.end()) {
            labels.push_back(name);
        }
    }
    std::sort(labels.begin(), labels.end());
    doc["labels_present"] = labels;

    if (cfg.audit_cells > 0) {
        AuditOptions audit;
        audit.cells = cfg.audit_cells;
        const AuditReport report = audit_grid(grid, cfg.params, cfg.schedule, audit);
        ordered_json aj;
        aj["cells_checked"] = report.cells_checked;
        aj["cells_skipped"] = report.cells_skipped;
        ordered_json mismatches = ordered_json::array();
        for (const AuditMismatch& m : report.mismatches) {
            mismatches.push_back(ordered_json{
                {"i", m.i},
                {"j", m.j},
                {"label", std::string(cell_label_name(m.label))},
                {"observed", m.observed}});
        }
        aj["mismatches"] = mismatches;
        doc["audit"] = aj;
    }
    emit(out, doc);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seasonal two-species competition model: thresholds, Floquet "
                 "multipliers, regime classification, trajectories and "
                 "tau1-tau2 bifurcation sweeps"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<double> tau1_override, tau2_override;
    std::optional<int> periods_override;
    std::optional<std::string> out_override, grid_override, species_override;
    std::optional<int> stride_override, audit_override;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file")
            ->required();
        cmd->add_option("--tau1", tau1_override, "override schedule tau1");
        cmd->add_option("--tau2", tau2_override, "override schedule tau2");
        return cmd;
    };

    CLI::App* cmd_th = add_common(
        app.add_subcommand("thresholds", "print the critical season lengths"));
    CLI::App* cmd_cl = add_common(
        app.add_subcommand("classify", "classify the long-run regime"));
    CLI::App* cmd_mu = add_common(
        app.add_subcommand("multipliers", "print the Floquet multipliers"));
    CLI::App* cmd_fp = add_common(app.add_subcommand(
        "fixed-point", "fixed point of a single-species period map"));
    cmd_fp->add_option("--species", species_override, "u or v (default u)");
    CLI::App* cmd_si = add_common(
        app.add_subcommand("simulate", "integrate a trajectory, write CSV"));
    cmd_si->add_option("--periods", periods_override, "number of periods");
    cmd_si->add_option("--out", out_override, "CSV output path");
    cmd_si->add_option("--stride", stride_override, "record every k-th step");
    CLI::App* cmd_sw = add_common(app.add_subcommand(
        "sweep", "classify a parameter grid, write CSV + JSON sidecar"));
    cmd_sw->add_option("--grid", grid_override, "grid resolution NxM");
    cmd_sw->add_option("--out", out_override, "grid CSV output path");
    cmd_sw->add_option("--audit", audit_override,
                       "cross-check this many cells by simulation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = load_config(config_path);
        if (tau1_override) cfg.schedule.tau1 = *tau1_override;
        if (tau2_override) cfg.schedule.tau2 = *tau2_override;
        if (periods_override) cfg.periods = *periods_override;
        if (out_override) cfg.output = *out_override;
        if (species_override) cfg.species = parse_species(*species_override);
        if (stride_override) cfg.sample_stride = *stride_override;
        if (audit_override) cfg.audit_cells = *audit_override;
        if (grid_override) {
            const auto sep = grid_override->find('x');
            int n1 = 0, n2 = 0;
            try {
                n1 = std::stoi(grid_override->substr(0, sep));
                n2 = sep == std::string::npos
                         ? 0
                         : std::stoi(grid_override->substr(sep + 1));
            } catch (...) {
                n1 = 0;
            }
            if (sep == std::string::npos || n1 <= 0 || n2 <= 0) {
                throw ConfigError("--grid expects NxM, got \"" + *grid_override + "\"");
            }
            if (!cfg.grid) {
                GridSpec spec;
                spec.min1 = 0.0;
                spec.max1 = cfg.schedule.T;
                spec.min2 = 0.0;
                spec.max2 = cfg.schedule.T;
                cfg.grid = spec;
            }
            cfg.grid->n1 = n1;
            cfg.grid->n2 = n2;
        }

        check_model(cfg);

        if (cmd_th->parsed()) return cmd_thresholds(cfg, out);
        if (cmd_cl->parsed()) return cmd_classify(cfg, out);
        if (cmd_mu->parsed()) return cmd_multipliers(cfg, out);
        if (cmd_fp->parsed()) return cmd_fixed_point(cfg, out);
        if (cmd_si->parsed()) return cmd_simulate(cfg, out);
        if (cmd_sw->parsed()) return cmd_sweep(cfg, out);
        err << "error: no command\n";
        return 2;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const BlowupError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace seasonal::cli
