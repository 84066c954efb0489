#include "aeroshield/gateway/json_io.hpp"

#include <string>

namespace aeroshield::gateway {

using nlohmann::json;

namespace {

json optional_json(const std::optional<double>& value) { return value ? json(*value) : json(nullptr); }

}  // namespace

void put_dose(json& out, double dose_sv, const char* prefix) {
  const std::string p(prefix);
  out[p + "_sv"] = dose_sv;
  out[p + "_display"] = format_msv(dose_sv);
}

void put_money(json& out, Cents amount, const char* prefix) {
  const std::string p(prefix);
  out[p + "_cents"] = amount.value();
  out[p + "_usd"] = amount.usd_string();
}

json plan_json(const MitigationPlan& plan) {
  return {{"kind", to_string(plan.kind)}, {"altitude_km", optional_json(plan.altitude_km)}, {"label", describe(plan)}};
}

json evaluation_json(const PlanEvaluation& evaluation) {
  json out;
  out["plan"] = plan_json(evaluation.plan);
  put_dose(out, evaluation.dose_sv);
  out["band"] = to_string(evaluation.band);
  out["compliant"] = evaluation.compliant;
  put_money(out, evaluation.loss, "loss");
  return out;
}

json scenario_json(const FlareScenario& s, bool dose_computable) {
  return {{"id", s.id},
          {"label", s.label},
          {"recurrence_years", s.recurrence_years},
          {"annual_rate", s.annual_rate()},
          {"sunspot_area_fraction", s.sunspot_area_fraction},
          {"energy_erg", optional_json(s.energy_erg)},
          {"reference_dose_sv", optional_json(s.reference_dose_sv)},
          {"x_magnitude", optional_json(s.x_magnitude)},
          {"dose_computable", dose_computable}};
}

json risk_item_json(const RiskItem& item) {
  json out = {{"label", item.label}, {"annual_frequency", item.annual_frequency}};
  put_money(out, item.severity, "severity");
  return out;
}

}  // namespace aeroshield::gateway
