#include "aeroshield/gateway/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "aeroshield/errors.hpp"
#include "aeroshield/hash.hpp"

namespace aeroshield::gateway {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed, const std::string& field) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown key '" + key + "'", field.empty() ? key : field + "." + key);
    }
  }
}

const json& require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError("expected an object", field);
  return j;
}

const json& require_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError("expected an array", field);
  return j;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("expected a number", field);
  return j.get<double>();
}

std::string string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError("expected a string", field);
  return j.get<std::string>();
}

// [[a, b], ...] as pairs of numbers.
std::vector<std::pair<double, double>> number_pairs(const json& j, const std::string& field) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < require_array(j, field).size(); ++i) {
    const std::string item_field = field + "[" + std::to_string(i) + "]";
    const json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) throw ConfigError("expected a [number, number] pair", item_field);
    out.emplace_back(number(pair[0], item_field), number(pair[1], item_field));
  }
  return out;
}

void apply_atmosphere(EngineConfig& config, const json& j) {
  require_object(j, "atmosphere");
  reject_unknown_keys(j, {"anchors", "reference_altitude_km"}, "atmosphere");
  std::vector<AltitudeDepthAnchor> anchors(config.atmosphere.anchors().begin(), config.atmosphere.anchors().end());
  if (j.contains("anchors")) {
    anchors.clear();
    for (const auto& [alt, depth] : number_pairs(j["anchors"], "atmosphere.anchors")) anchors.push_back({alt, depth});
  }
  double reference = config.atmosphere.reference_altitude_km();
  if (j.contains("reference_altitude_km")) {
    reference = number(j["reference_altitude_km"], "atmosphere.reference_altitude_km");
  }
  config.atmosphere = AltitudeDepthTable(std::move(anchors), reference);
}

std::optional<double> optional_number(const json& j, const char* key, const std::string& field) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return number(j[key], field + "." + key);
}

void apply_scenarios(EngineConfig& config, const json& j) {
  require_array(j, "scenarios");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "scenarios[" + std::to_string(i) + "]";
    const json& entry = require_object(j[i], field);
    reject_unknown_keys(entry,
                        {"id", "label", "recurrence_years", "sunspot_area_fraction", "energy_erg",
                         "reference_dose_sv", "x_magnitude"},
                        field);
    if (!entry.contains("id")) throw ConfigError("missing 'id'", field);
    const std::string id = string(entry["id"], field + ".id");

    auto it = std::find_if(config.scenarios.begin(), config.scenarios.end(),
                           [&](const FlareScenario& s) { return s.id == id; });
    const bool is_new = it == config.scenarios.end();
    if (is_new && !entry.contains("recurrence_years")) {
      throw ConfigError("new scenario requires 'recurrence_years'", field + ".recurrence_years");
    }
    FlareScenario scenario = is_new ? FlareScenario{id, id, 1.0, 0.0, {}, {}, {}} : *it;
    if (entry.contains("label")) scenario.label = string(entry["label"], field + ".label");
    if (entry.contains("recurrence_years")) {
      scenario.recurrence_years = number(entry["recurrence_years"], field + ".recurrence_years");
    }
    if (entry.contains("sunspot_area_fraction")) {
      scenario.sunspot_area_fraction = number(entry["sunspot_area_fraction"], field + ".sunspot_area_fraction");
    }
    // An explicit null clears an optional field.
    if (entry.contains("energy_erg")) scenario.energy_erg = optional_number(entry, "energy_erg", field);
    if (entry.contains("reference_dose_sv")) {
      scenario.reference_dose_sv = optional_number(entry, "reference_dose_sv", field);
    }
    if (entry.contains("x_magnitude")) scenario.x_magnitude = optional_number(entry, "x_magnitude", field);
    validate(scenario, "scenarios");
    if (is_new) {
      config.scenarios.push_back(std::move(scenario));
    } else {
      *it = std::move(scenario);
    }
  }
}

FrequencyInterpolation parse_interpolation(const json& j) {
  const std::string mode = string(j, "frequency_interpolation");
  if (mode == "piecewise-loglog") return FrequencyInterpolation::piecewise_loglog;
  if (mode == "least-squares-powerlaw") return FrequencyInterpolation::least_squares_powerlaw;
  throw ConfigError("expected 'piecewise-loglog' or 'least-squares-powerlaw'", "frequency_interpolation");
}

void apply_dose_profiles(EngineConfig& config, const json& j) {
  require_object(j, "dose_profiles");
  for (const auto& [label, value] : j.items()) {
    const std::string field = "dose_profiles." + label;
    std::vector<DepthDoseAnchor> anchors;
    for (const auto& [depth, dose] : number_pairs(value, field)) anchors.push_back({depth, dose});
    DoseDepthProfile profile(label, std::move(anchors), field);
    if (label == config.dose_model.shape.event_label()) {
      config.dose_model.shape = std::move(profile);
      continue;
    }
    if (std::none_of(config.scenarios.begin(), config.scenarios.end(),
                     [&](const FlareScenario& s) { return s.id == label; })) {
      throw ConfigError("profile does not match any scenario id", field);
    }
    config.dose_model.scenario_profiles.insert_or_assign(label, std::move(profile));
  }
}

void apply_energy_scaling(EngineConfig& config, const json& j) {
  require_object(j, "energy_scaling");
  reject_unknown_keys(j, {"kappa_sv_per_erg", "reference_energy_erg"}, "energy_scaling");
  auto& scaling = config.dose_model.scaling;
  if (auto v = optional_number(j, "kappa_sv_per_erg", "energy_scaling")) scaling.kappa_sv_per_erg = *v;
  if (auto v = optional_number(j, "reference_energy_erg", "energy_scaling")) scaling.reference_energy_erg = *v;
  if (!(scaling.kappa_sv_per_erg > 0.0)) throw ConfigError("must be > 0", "energy_scaling.kappa_sv_per_erg");
}

void apply_policy(EngineConfig& config, const json& j) {
  require_object(j, "policy");
  reject_unknown_keys(j,
                      {"public_limit_sv", "occupational_limit_sv", "deterministic_limit_sv", "fatal_dose_sv",
                       "background_annual_sv"},
                      "policy");
  auto& p = config.policy;
  if (auto v = optional_number(j, "public_limit_sv", "policy")) p.public_limit_sv = *v;
  if (auto v = optional_number(j, "occupational_limit_sv", "policy")) p.occupational_limit_sv = *v;
  if (auto v = optional_number(j, "deterministic_limit_sv", "policy")) p.deterministic_limit_sv = *v;
  if (auto v = optional_number(j, "fatal_dose_sv", "policy")) p.fatal_dose_sv = *v;
  if (auto v = optional_number(j, "background_annual_sv", "policy")) p.background_annual_sv = *v;
}

void apply_cost(EngineConfig& config, const json& j) {
  require_object(j, "cost");
  reject_unknown_keys(j, {"line_items", "fare_usd", "seats", "convention"}, "cost");
  auto& cost = config.cost;
  if (j.contains("line_items")) {
    for (const auto& [name, value] : require_object(j["line_items"], "cost.line_items").items()) {
      const std::string field = "cost.line_items." + name;
      if (value.is_null()) {
        cost.line_items.erase(name);
        continue;
      }
      cost.line_items.insert_or_assign(name, Cents::from_usd(number(value, field)));
    }
  }
  if (j.contains("fare_usd")) cost.fare = Cents::from_usd(number(j["fare_usd"], "cost.fare_usd"));
  if (j.contains("seats")) {
    if (!j["seats"].is_number_integer()) throw ConfigError("expected an integer", "cost.seats");
    cost.seats = j["seats"].get<std::int64_t>();
  }
  if (j.contains("convention")) {
    const std::string convention = string(j["convention"], "cost.convention");
    if (convention == "paper") {
      config.convention = LossConvention::paper;
    } else if (convention == "incremental") {
      config.convention = LossConvention::incremental;
    } else {
      throw ConfigError("expected 'paper' or 'incremental'", "cost.convention");
    }
  }
}

void apply_decision(EngineConfig& config, const json& j) {
  require_object(j, "decision");
  reject_unknown_keys(j, {"altitudes_km", "min_altitude_km"}, "decision");
  if (j.contains("altitudes_km")) {
    config.candidate_altitudes_km.clear();
    const json& list = require_array(j["altitudes_km"], "decision.altitudes_km");
    for (std::size_t i = 0; i < list.size(); ++i) {
      config.candidate_altitudes_km.push_back(number(list[i], "decision.altitudes_km[" + std::to_string(i) + "]"));
    }
  }
  if (auto v = optional_number(j, "min_altitude_km", "decision")) config.min_cruise_altitude_km = *v;
}

void validate_cross_references(const EngineConfig& config) {
  std::set<std::string> ids;
  for (const auto& s : config.scenarios) {
    if (!ids.insert(s.id).second) throw ConfigError("duplicate scenario id '" + s.id + "'", "scenarios");
  }
  validate(config.policy);
  validate(config.cost);
  const auto& atm = config.atmosphere;
  for (std::size_t i = 0; i < config.candidate_altitudes_km.size(); ++i) {
    const double alt = config.candidate_altitudes_km[i];
    if (!(alt < atm.reference_altitude_km() && alt >= atm.floor_km())) {
      throw ConfigError("candidate altitude must be below the reference altitude and inside the table",
                        "decision.altitudes_km[" + std::to_string(i) + "]");
    }
  }
  if (!(config.min_cruise_altitude_km >= atm.floor_km() &&
        config.min_cruise_altitude_km <= atm.reference_altitude_km())) {
    throw ConfigError("must lie inside the atmosphere table", "decision.min_altitude_km");
  }
  // Scenario doses are pinned at the shape's first anchor, which must not lie
  // deeper than the atmosphere ceiling.
  if (config.dose_model.shape.reference_depth() > atm.min_depth()) {
    throw ConfigError("shape profile starts deeper than the atmosphere ceiling", "dose_profiles");
  }
}

}  // namespace

DecisionContext EngineConfig::context() const {
  return DecisionContext{atmosphere, dose_model, policy, cost, convention, min_cruise_altitude_km};
}

EngineConfig config_from_json(const json& overrides) {
  EngineConfig config;
  if (overrides.is_null()) return config;
  require_object(overrides, "<root>");
  reject_unknown_keys(overrides,
                      {"atmosphere", "scenarios", "frequency_points", "frequency_interpolation", "dose_profiles",
                       "energy_scaling", "policy", "cost", "decision"},
                      "");

  if (overrides.contains("atmosphere")) apply_atmosphere(config, overrides["atmosphere"]);
  if (overrides.contains("scenarios")) apply_scenarios(config, overrides["scenarios"]);
  if (overrides.contains("frequency_points") || overrides.contains("frequency_interpolation")) {
    std::vector<FrequencyPoint> points(config.frequency.points().begin(), config.frequency.points().end());
    if (overrides.contains("frequency_points")) {
      points.clear();
      for (const auto& [x, p] : number_pairs(overrides["frequency_points"], "frequency_points")) points.push_back({x, p});
    }
    const auto mode = overrides.contains("frequency_interpolation")
                          ? parse_interpolation(overrides["frequency_interpolation"])
                          : config.frequency.mode();
    config.frequency = FrequencyCatalog(std::move(points), mode);
  }
  if (overrides.contains("dose_profiles")) apply_dose_profiles(config, overrides["dose_profiles"]);
  if (overrides.contains("energy_scaling")) apply_energy_scaling(config, overrides["energy_scaling"]);
  if (overrides.contains("policy")) apply_policy(config, overrides["policy"]);
  if (overrides.contains("cost")) apply_cost(config, overrides["cost"]);
  if (overrides.contains("decision")) apply_decision(config, overrides["decision"]);
  validate_cross_references(config);
  return config;
}

EngineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json parsed;
  try {
    parsed = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON in '") + path.string() + "': " + e.what());
  }
  return config_from_json(parsed);
}

json to_json(const EngineConfig& config) {
  json out;
  json anchors = json::array();
  for (const auto& a : config.atmosphere.anchors()) anchors.push_back({a.altitude_km, a.depth_gcm2});
  out["atmosphere"] = {{"anchors", anchors}, {"reference_altitude_km", config.atmosphere.reference_altitude_km()}};

  json scenarios = json::array();
  for (const auto& s : config.scenarios) {
    json entry = {{"id", s.id},
                  {"label", s.label},
                  {"recurrence_years", s.recurrence_years},
                  {"sunspot_area_fraction", s.sunspot_area_fraction}};
    entry["energy_erg"] = s.energy_erg ? json(*s.energy_erg) : json(nullptr);
    entry["reference_dose_sv"] = s.reference_dose_sv ? json(*s.reference_dose_sv) : json(nullptr);
    entry["x_magnitude"] = s.x_magnitude ? json(*s.x_magnitude) : json(nullptr);
    scenarios.push_back(std::move(entry));
  }
  out["scenarios"] = std::move(scenarios);

  json points = json::array();
  for (const auto& p : config.frequency.points()) points.push_back({p.x_magnitude, p.annual_probability});
  out["frequency_points"] = std::move(points);
  out["frequency_interpolation"] = config.frequency.mode() == FrequencyInterpolation::piecewise_loglog
                                       ? "piecewise-loglog"
                                       : "least-squares-powerlaw";

  const auto profile_json = [](const DoseDepthProfile& profile) {
    json rows = json::array();
    for (const auto& a : profile.anchors()) rows.push_back({a.depth_gcm2, a.dose_sv});
    return rows;
  };
  json profiles = json::object();
  profiles[config.dose_model.shape.event_label()] = profile_json(config.dose_model.shape);
  for (const auto& [id, profile] : config.dose_model.scenario_profiles) profiles[id] = profile_json(profile);
  out["dose_profiles"] = std::move(profiles);

  out["energy_scaling"] = {{"kappa_sv_per_erg", config.dose_model.scaling.kappa_sv_per_erg},
                           {"reference_energy_erg", config.dose_model.scaling.reference_energy_erg}};
  const auto& p = config.policy;
  out["policy"] = {{"public_limit_sv", p.public_limit_sv},
                   {"occupational_limit_sv", p.occupational_limit_sv},
                   {"deterministic_limit_sv", p.deterministic_limit_sv},
                   {"fatal_dose_sv", p.fatal_dose_sv},
                   {"background_annual_sv", p.background_annual_sv}};

  json items = json::object();
  for (const auto& [name, amount] : config.cost.line_items) {
    items[name] = static_cast<double>(amount.value()) / 100.0;
  }
  out["cost"] = {{"line_items", items},
                 {"fare_usd", static_cast<double>(config.cost.fare.value()) / 100.0},
                 {"seats", config.cost.seats},
                 {"convention", config.convention == LossConvention::paper ? "paper" : "incremental"}};
  out["decision"] = {{"altitudes_km", config.candidate_altitudes_km},
                     {"min_altitude_km", config.min_cruise_altitude_km}};
  return out;
}

std::string config_hash(const EngineConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a_64(to_json(config).dump())));
  return buf;
}

}  // namespace aeroshield::gateway
