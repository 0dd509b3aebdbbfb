#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "seasonal/integrator.hpp"
#include "seasonal/params.hpp"
#include "seasonal/stability.hpp"
#include "seasonal/sweep.hpp"

namespace seasonal {

// 17 significant digits, locale-independent (std::to_chars).
std::string format_number(double value);

// Serializer matching format_number for every floating-point scalar, so
// printed values round-trip bit-exactly and golden files stay stable.
void write_json(std::ostream& out, const nlohmann::ordered_json& j, int indent = 2);
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

// Strict-parse helpers. All throw std::invalid_argument with the offending
// key named.
void expect_object(const nlohmann::json& j, std::string_view context);
void reject_unknown_keys(const nlohmann::json& j,
                         std::initializer_list<std::string_view> allowed,
                         std::string_view context);
double require_number(const nlohmann::json& j, std::string_view key,
                      std::string_view context);

// Parameter-file surfaces: exact field names, unknown keys rejected.
ModelParameters model_parameters_from_json(const nlohmann::json& j);
Schedule schedule_from_json(const nlohmann::json& j);
RawParameters raw_parameters_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ModelParameters& p);
nlohmann::ordered_json to_json(const Schedule& s);
nlohmann::ordered_json to_json(const State& state);
nlohmann::ordered_json to_json(const Thresholds& t);
nlohmann::ordered_json to_json(const Multipliers& m);
nlohmann::ordered_json to_json(const RegimeClassification& c);

// Sidecar for a grid CSV: axes, ranges, code->label table, boundary
// polylines as coordinate arrays.
nlohmann::ordered_json grid_sidecar(const RegionGrid& grid);

}  // namespace seasonal
