#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "aeroshield/actuarial.hpp"
#include "aeroshield/atmosphere.hpp"
#include "aeroshield/cost_model.hpp"
#include "aeroshield/decision_engine.hpp"
#include "aeroshield/dose_model.hpp"
#include "aeroshield/flare_model.hpp"

namespace aeroshield::gateway {

// Validated, immutable engine configuration: built-in defaults with any user
// overrides merged on top.
struct EngineConfig {
  AltitudeDepthTable atmosphere = AltitudeDepthTable::standard();
  FrequencyCatalog frequency = FrequencyCatalog::standard();
  std::vector<FlareScenario> scenarios = builtin_scenarios();
  DoseModel dose_model{};
  DoseLimitPolicy policy{};
  FlightCostConfig cost = FlightCostConfig::standard();
  LossConvention convention = LossConvention::paper;
  std::vector<double> candidate_altitudes_km{9.5, 7.0};
  double min_cruise_altitude_km = 7.0;

  // References members; valid while this config is alive.
  [[nodiscard]] DecisionContext context() const;

  [[nodiscard]] const FlareScenario& scenario(std::string_view id) const { return find_scenario(scenarios, id); }
};

// Applies a JSON override document on top of the defaults. Unknown keys and
// invariant violations throw ConfigError naming the offending field.
[[nodiscard]] EngineConfig config_from_json(const nlohmann::json& overrides);

// Reads and parses `path`, then config_from_json. Throws ConfigError.
[[nodiscard]] EngineConfig load_config(const std::filesystem::path& path);

// Effective configuration in the override schema; loading it back yields the
// same configuration.
[[nodiscard]] nlohmann::json to_json(const EngineConfig& config);

// Hex FNV-1a of the canonical effective configuration.
[[nodiscard]] std::string config_hash(const EngineConfig& config);

}  // namespace aeroshield::gateway
