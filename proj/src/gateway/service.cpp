#include "aeroshield/gateway/service.hpp"

#include <cmath>

#include "aeroshield/errors.hpp"
#include "aeroshield/gateway/json_io.hpp"

namespace aeroshield::gateway {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxProfilePoints = 10000;

const json& require_field(const json& body, const char* key) {
  if (!body.contains(key)) throw RequestError(key, "is required");
  return body[key];
}

std::string string_field(const json& body, const char* key) {
  const json& v = require_field(body, key);
  if (!v.is_string()) throw RequestError(key, "must be a string");
  return v.get<std::string>();
}

double number_field(const json& body, const char* key) {
  const json& v = require_field(body, key);
  if (!v.is_number()) throw RequestError(key, "must be a number");
  const double value = v.get<double>();
  if (!std::isfinite(value)) throw RequestError(key, "must be finite");
  return value;
}

bool is_non_negative_integer(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

void require_object_body(const json& body) {
  if (!body.is_object()) throw RequestError("body", "must be a JSON object");
}

double limit_sv_from_msv(double limit_msv) {
  if (!(limit_msv > 0.0)) throw RequestError("limit_msv", "must be > 0");
  return limit_msv * 1e-3;
}

}  // namespace

PlanRequest parse_plan_request(const json& body) {
  require_object_body(body);
  PlanRequest r;
  r.scenario = string_field(body, "scenario");
  r.limit_msv = number_field(body, "limit_msv");
  if (body.contains("altitudes") && !body["altitudes"].is_null()) {
    const json& list = body["altitudes"];
    if (!list.is_array()) throw RequestError("altitudes", "must be an array of numbers");
    std::vector<double> altitudes;
    for (const auto& v : list) {
      if (!v.is_number()) throw RequestError("altitudes", "must be an array of numbers");
      altitudes.push_back(v.get<double>());
    }
    r.altitudes_km = std::move(altitudes);
  }
  if (body.contains("continuous")) {
    if (!body["continuous"].is_boolean()) throw RequestError("continuous", "must be a boolean");
    r.continuous = body["continuous"].get<bool>();
  }
  return r;
}

WhatIfRequest parse_what_if_request(const json& body) {
  require_object_body(body);
  return {string_field(body, "scenario"), number_field(body, "limit_msv"), number_field(body, "altitude_km")};
}

PremiumRequest parse_premium_request(const json& body) {
  require_object_body(body);
  PremiumRequest r;
  r.limit_msv = number_field(body, "limit_msv");
  if (body.contains("mode")) {
    const std::string mode = string_field(body, "mode");
    if (mode == "exact") {
      r.mode = PremiumMode::exact;
    } else if (mode == "mc") {
      r.mode = PremiumMode::monte_carlo;
    } else {
      throw RequestError("mode", "must be 'exact' or 'mc'");
    }
  }
  if (body.contains("years")) {
    if (!is_non_negative_integer(body["years"])) throw RequestError("years", "must be a positive integer");
    r.years = body["years"].get<std::size_t>();
  }
  if (body.contains("seed")) {
    if (!is_non_negative_integer(body["seed"])) throw RequestError("seed", "must be a non-negative integer");
    r.seed = body["seed"].get<std::uint64_t>();
  }
  if (body.contains("exposure_fraction")) r.exposure_fraction = number_field(body, "exposure_fraction");
  if (body.contains("scenarios") && !body["scenarios"].is_null()) {
    const json& list = body["scenarios"];
    if (!list.is_array()) throw RequestError("scenarios", "must be an array of scenario ids");
    std::vector<std::string> ids;
    for (const auto& v : list) {
      if (!v.is_string()) throw RequestError("scenarios", "must be an array of scenario ids");
      ids.push_back(v.get<std::string>());
    }
    r.scenarios = std::move(ids);
  }
  return r;
}

Service::Service(EngineConfig config, RunLog* run_log)
    : config_(std::move(config)),
      context_(config_.context()),
      config_hash_(gateway::config_hash(config_)),
      run_log_(run_log) {}

json Service::scenarios() const {
  json list = json::array();
  for (const auto& s : config_.scenarios) {
    list.push_back(scenario_json(s, is_dose_computable(config_.dose_model, s)));
  }
  return {{"scenarios", list}, {"config_hash", config_hash_}};
}

json Service::dose(const DoseRequest& request) const {
  const FlareScenario& scenario = config_.scenario(request.scenario);
  const DoseMode mode = request.mode.value_or(preferred_dose_mode(config_.dose_model, scenario));
  const double depth = config_.atmosphere.depth_at_altitude(request.altitude_km);
  const EventDoseCurve curve = event_curve(config_.dose_model, scenario, mode);
  const double dose = curve.dose_at_depth(depth);
  json out = {{"scenario", scenario.id},
              {"altitude_km", request.altitude_km},
              {"depth_gcm2", depth},
              {"mode", mode == DoseMode::anchor ? "anchor" : "energy"}};
  put_dose(out, dose);
  out["band"] = to_string(classify_dose(dose, config_.policy));
  out["extrapolated"] = curve.profile->is_extrapolated(depth);
  return out;
}

json Service::dose_profile(const ProfileRequest& request) const {
  if (request.points < 1 || request.points > kMaxProfilePoints) {
    throw RequestError("points", "must be between 1 and " + std::to_string(kMaxProfilePoints));
  }
  const FlareScenario& scenario = config_.scenario(request.scenario);
  const auto& atm = config_.atmosphere;
  const double top = atm.reference_altitude_km();
  const double bottom = request.min_altitude_km.value_or(config_.min_cruise_altitude_km);
  if (!(bottom >= atm.floor_km() && bottom <= top)) {
    throw DomainError("min_altitude_km must lie within the atmosphere table below the reference altitude");
  }
  const EventDoseCurve curve =
      event_curve(config_.dose_model, scenario, preferred_dose_mode(config_.dose_model, scenario));

  json rows = json::array();
  for (std::size_t i = 0; i < request.points; ++i) {
    const double altitude =
        request.points == 1 ? top
        : i + 1 == request.points
            ? bottom
            : top - (top - bottom) * static_cast<double>(i) / static_cast<double>(request.points - 1);
    const double depth = atm.depth_at_altitude(altitude);
    rows.push_back({{"depth_gcm2", depth},
                    {"altitude_km", altitude},
                    {"dose_sv", curve.dose_at_depth(depth)},
                    {"extrapolated", curve.profile->is_extrapolated(depth)}});
  }
  json limits = {{"public_sv", config_.policy.public_limit_sv},
                 {"occupational_sv", config_.policy.occupational_limit_sv},
                 {"deterministic_sv", config_.policy.deterministic_limit_sv},
                 {"fatal_sv", config_.policy.fatal_dose_sv}};
  return {{"scenario", scenario.id}, {"rows", rows}, {"limits", limits}};
}

json Service::plan(const PlanRequest& request) {
  const FlareScenario& scenario = config_.scenario(request.scenario);
  const double limit = limit_sv_from_msv(request.limit_msv);
  const std::vector<double>& altitudes = request.altitudes_km ? *request.altitudes_km : config_.candidate_altitudes_km;

  const auto evaluations = evaluate_plans(context_, scenario, limit, altitudes);
  const PlanEvaluation best = select_recommendation(evaluations);

  json out = {{"scenario", scenario.id}, {"policy_limit_sv", limit}, {"config_hash", config_hash_}};
  json list = json::array();
  for (const auto& e : evaluations) list.push_back(evaluation_json(e));
  out["evaluations"] = std::move(list);
  out["recommendation"] = evaluation_json(best);

  if (request.continuous) {
    json continuous;
    if (const auto opt = optimal_continuous_altitude(context_, scenario, limit)) {
      continuous = {{"compliant_altitude_found", true},
                    {"altitude_km", opt->altitude_km},
                    {"depth_gcm2", opt->depth_gcm2}};
      put_dose(continuous, opt->dose_sv);
      put_money(continuous, opt->loss, "loss");
    } else {
      continuous = {{"compliant_altitude_found", false}, {"fallback", "cancel"}};
      put_money(continuous, cancellation_loss(config_.cost), "loss");
    }
    out["continuous"] = std::move(continuous);
  }

  if (run_log_ != nullptr) {
    RunRecord record;
    record.timestamp = utc_timestamp_now();
    record.scenario_id = scenario.id;
    record.policy_limit_sv = limit;
    record.plan_kind = std::string(to_string(best.plan.kind));
    record.plan_altitude_km = best.plan.altitude_km;
    record.plan_label = describe(best.plan);
    record.dose_sv = best.dose_sv;
    record.loss_cents = best.loss.value();
    record.config_hash = config_hash_;
    run_log_->append(record);
  }
  return out;
}

json Service::what_if(const WhatIfRequest& request) const {
  const FlareScenario& scenario = config_.scenario(request.scenario);
  const double limit = limit_sv_from_msv(request.limit_msv);
  const auto& atm = config_.atmosphere;
  const MitigationPlan plan = request.altitude_km == atm.reference_altitude_km()
                                  ? MitigationPlan::proceed()
                                  : MitigationPlan::descend(request.altitude_km);
  validate(plan, atm);
  const double depth = atm.depth_at_altitude(request.altitude_km);
  const EventDoseCurve curve =
      event_curve(config_.dose_model, scenario, preferred_dose_mode(config_.dose_model, scenario));
  const double dose = curve.dose_at_depth(depth);

  json out = {{"scenario", scenario.id},
              {"policy_limit_sv", limit},
              {"altitude_km", request.altitude_km},
              {"depth_gcm2", depth},
              {"plan", plan_json(plan)}};
  put_dose(out, dose);
  out["band"] = to_string(classify_dose(dose, config_.policy));
  out["compliant"] = dose <= limit;
  put_money(out, plan_loss(plan, config_.cost, atm, config_.convention), "loss");
  return out;
}

json Service::premium(const PremiumRequest& request) const {
  const double limit = limit_sv_from_msv(request.limit_msv);
  if (!(request.exposure_fraction >= 0.0 && request.exposure_fraction <= 1.0)) {
    throw RequestError("exposure_fraction", "must lie in [0, 1]");
  }
  std::vector<FlareScenario> selected;
  if (request.scenarios) {
    for (const auto& id : *request.scenarios) selected.push_back(config_.scenario(id));
  } else {
    for (const auto& s : config_.scenarios) {
      if (is_dose_computable(config_.dose_model, s)) selected.push_back(s);
    }
  }

  const auto& altitudes = config_.candidate_altitudes_km;
  const auto items = mitigated_risk_items(context_, selected, limit, altitudes, request.exposure_fraction);
  json out = {{"policy_limit_sv", limit},
              {"exposure_fraction", request.exposure_fraction},
              {"mode", request.mode == PremiumMode::exact ? "exact" : "mc"}};
  json list = json::array();
  for (const auto& item : items) list.push_back(risk_item_json(item));
  out["items"] = std::move(list);
  const Cents exact = premium_exact(items);
  put_money(out, exact, "exact_premium");

  if (request.mode == PremiumMode::exact) {
    put_money(out, exact, "premium");
    return out;
  }
  if (request.years < kMinMonteCarloYears) {
    throw RequestError("years", "must be >= " + std::to_string(kMinMonteCarloYears));
  }
  const PremiumQuote quote = premium_monte_carlo(context_, selected, limit, altitudes, request.exposure_fraction,
                                                 request.years, request.seed);
  put_money(out, quote.expected_annual_loss(), "premium");
  out["expected_annual_loss_cents_unrounded"] = quote.expected_annual_loss_cents;
  out["standard_error_cents"] = quote.standard_error_cents;
  out["years"] = quote.n_years;
  out["seed"] = quote.seed;
  return out;
}

}  // namespace aeroshield::gateway
