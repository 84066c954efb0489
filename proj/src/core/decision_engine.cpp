#include "aeroshield/decision_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "aeroshield/errors.hpp"

namespace aeroshield {

namespace {

PlanEvaluation evaluate(const DecisionContext& ctx, const EventDoseCurve& curve, const MitigationPlan& plan,
                        double limit_sv) {
  PlanEvaluation eval;
  eval.plan = plan;
  if (plan.kind == PlanKind::cancel) {
    eval.dose_sv = 0.0;
  } else {
    const double altitude = plan.altitude_km.value_or(ctx.atmosphere.reference_altitude_km());
    eval.dose_sv = curve.dose_at_depth(ctx.atmosphere.depth_at_altitude(altitude));
  }
  eval.band = classify_dose(eval.dose_sv, ctx.policy);
  eval.compliant = eval.dose_sv <= limit_sv;
  eval.loss = plan_loss(plan, ctx.cost, ctx.atmosphere, ctx.convention);
  return eval;
}

void check_limit(double limit_sv) {
  if (!(std::isfinite(limit_sv) && limit_sv > 0.0)) throw DomainError("policy limit must be > 0");
}

int kind_rank(PlanKind kind) {
  switch (kind) {
    case PlanKind::proceed: return 0;
    case PlanKind::descend: return 1;
    case PlanKind::cancel: return 2;
  }
  return 3;
}

// proceed flies at the reference altitude, above every descent
double tie_altitude(const PlanEvaluation& e) {
  if (e.plan.kind == PlanKind::cancel) return -HUGE_VAL;
  return e.plan.altitude_km.value_or(HUGE_VAL);
}

}  // namespace

std::vector<PlanEvaluation> evaluate_plans(const DecisionContext& ctx, const FlareScenario& scenario,
                                           double policy_limit_sv, std::span<const double> altitudes_km) {
  check_limit(policy_limit_sv);
  std::vector<double> candidates(altitudes_km.begin(), altitudes_km.end());
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const EventDoseCurve curve = event_curve(ctx.dose_model, scenario, preferred_dose_mode(ctx.dose_model, scenario));

  std::vector<PlanEvaluation> out;
  out.reserve(candidates.size() + 2);
  out.push_back(evaluate(ctx, curve, MitigationPlan::proceed(), policy_limit_sv));
  for (double altitude : candidates) {
    out.push_back(evaluate(ctx, curve, MitigationPlan::descend(altitude), policy_limit_sv));
  }
  out.push_back(evaluate(ctx, curve, MitigationPlan::cancel(), policy_limit_sv));
  return out;
}

PlanEvaluation select_recommendation(std::span<const PlanEvaluation> evaluations) {
  const PlanEvaluation* best = nullptr;
  for (const auto& e : evaluations) {
    if (!e.compliant) continue;
    if (best == nullptr) {
      best = &e;
      continue;
    }
    if (e.loss != best->loss) {
      if (e.loss < best->loss) best = &e;
      continue;
    }
    const double a = tie_altitude(e);
    const double b = tie_altitude(*best);
    if (a > b || (a == b && kind_rank(e.plan.kind) < kind_rank(best->plan.kind))) best = &e;
  }
  if (best == nullptr) throw DomainError("no compliant plan in the evaluated set");
  return *best;
}

PlanEvaluation recommend(const DecisionContext& ctx, const FlareScenario& scenario, double policy_limit_sv,
                         std::span<const double> altitudes_km) {
  return select_recommendation(evaluate_plans(ctx, scenario, policy_limit_sv, altitudes_km));
}

std::optional<ContinuousOptimum> optimal_continuous_altitude(const DecisionContext& ctx,
                                                             const FlareScenario& scenario, double policy_limit_sv) {
  check_limit(policy_limit_sv);
  const auto& atm = ctx.atmosphere;
  const double top = atm.reference_altitude_km();
  const double floor = std::max(ctx.min_cruise_altitude_km, atm.floor_km());
  const EventDoseCurve curve = event_curve(ctx.dose_model, scenario, preferred_dose_mode(ctx.dose_model, scenario));
  const auto dose_at = [&](double altitude) { return curve.dose_at_depth(atm.depth_at_altitude(altitude)); };

  const auto make = [&](double altitude) {
    ContinuousOptimum opt;
    opt.altitude_km = altitude;
    opt.depth_gcm2 = atm.depth_at_altitude(altitude);
    opt.dose_sv = curve.dose_at_depth(opt.depth_gcm2);
    opt.loss = altitude >= top ? Cents{0}
                               : plan_loss(MitigationPlan::descend(altitude), ctx.cost, atm, ctx.convention);
    return opt;
  };

  if (dose_at(top) <= policy_limit_sv) return make(top);
  if (dose_at(floor) > policy_limit_sv) return std::nullopt;

  const DepthSolution solution = curve.depth_for_limit(policy_limit_sv, atm.depth_at_altitude(floor));
  double altitude = atm.altitude_at_depth(std::clamp(solution.depth_gcm2, atm.min_depth(), atm.max_depth()));
  altitude = std::clamp(altitude, floor, top);

  // The analytic inverse can land an ulp on the wrong side of the limit;
  // step down until the dose complies.
  while (altitude > floor && dose_at(altitude) > policy_limit_sv) {
    altitude = std::max(floor, std::nextafter(altitude, floor) - 1e-12);
  }
  return make(altitude);
}

}  // namespace aeroshield
