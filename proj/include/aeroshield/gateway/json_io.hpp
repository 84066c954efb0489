#pragma once

#include <json.hpp>

#include "aeroshield/actuarial.hpp"
#include "aeroshield/decision_engine.hpp"
#include "aeroshield/flare_model.hpp"

// Wire formats shared by the CLI --json output and the HTTP API. Doses go out
// in Sv with an mSv display string; money as integer cents with a USD string.
namespace aeroshield::gateway {

void put_dose(nlohmann::json& out, double dose_sv, const char* prefix = "dose");
void put_money(nlohmann::json& out, Cents amount, const char* prefix);

[[nodiscard]] nlohmann::json plan_json(const MitigationPlan& plan);
[[nodiscard]] nlohmann::json evaluation_json(const PlanEvaluation& evaluation);
[[nodiscard]] nlohmann::json scenario_json(const FlareScenario& scenario, bool dose_computable);
[[nodiscard]] nlohmann::json risk_item_json(const RiskItem& item);

}  // namespace aeroshield::gateway
