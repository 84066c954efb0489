#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aeroshield/atmosphere.hpp"
#include "aeroshield/cost_model.hpp"
#include "aeroshield/dose_model.hpp"
#include "aeroshield/flare_model.hpp"

namespace aeroshield {

// Everything the engine reads when pricing a plan. Non-owning.
struct DecisionContext {
  const AltitudeDepthTable& atmosphere;
  const DoseModel& dose_model;
  const DoseLimitPolicy& policy;
  const FlightCostConfig& cost;
  LossConvention convention = LossConvention::paper;
  // Lowest cruise altitude the continuous optimizer will consider.
  double min_cruise_altitude_km = 7.0;
};

struct PlanEvaluation {
  MitigationPlan plan;
  double dose_sv = 0.0;
  DoseBand band = DoseBand::below_public;
  bool compliant = false;
  Cents loss{0};
};

// Proceed at the reference altitude, descend to each candidate (highest
// first, duplicates dropped), cancel last. A plan is compliant when its dose
// is <= the limit; a cancelled flight carries no dose.
[[nodiscard]] std::vector<PlanEvaluation> evaluate_plans(const DecisionContext& ctx, const FlareScenario& scenario,
                                                         double policy_limit_sv,
                                                         std::span<const double> altitudes_km);

// The compliant plan of least loss. Ties go to the higher altitude, then to
// proceed over descend over cancel. Cancel is always compliant, so there is
// always an answer.
[[nodiscard]] PlanEvaluation recommend(const DecisionContext& ctx, const FlareScenario& scenario,
                                       double policy_limit_sv, std::span<const double> altitudes_km);

// Same selection over an already evaluated plan set.
[[nodiscard]] PlanEvaluation select_recommendation(std::span<const PlanEvaluation> evaluations);

struct ContinuousOptimum {
  double altitude_km = 0.0;
  double depth_gcm2 = 0.0;
  double dose_sv = 0.0;
  Cents loss{0};
};

// Highest altitude in [min_cruise_altitude_km, reference altitude] whose dose
// stays within the limit. Loss falls with altitude, so this is the cheapest
// compliant cruise. Empty when even the floor altitude exceeds the limit.
[[nodiscard]] std::optional<ContinuousOptimum> optimal_continuous_altitude(const DecisionContext& ctx,
                                                                           const FlareScenario& scenario,
                                                                           double policy_limit_sv);

}  // namespace aeroshield
