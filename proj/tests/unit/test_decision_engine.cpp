#include <doctest.h>

#include <cmath>
#include <random>

#include "aeroshield/decision_engine.hpp"
#include "aeroshield/errors.hpp"
#include "oracles.hpp"

using namespace aeroshield;

namespace {

struct Fixture {
  AltitudeDepthTable atmosphere = AltitudeDepthTable::standard();
  DoseModel dose_model;
  DoseLimitPolicy policy;
  FlightCostConfig cost = FlightCostConfig::standard();
  std::vector<FlareScenario> scenarios = builtin_scenarios();
  std::vector<double> menu{9.5, 7.0};

  [[nodiscard]] DecisionContext ctx() const { return {atmosphere, dose_model, policy, cost}; }
  [[nodiscard]] const FlareScenario& get(const char* id) const { return find_scenario(scenarios, id); }
};

// Brute force over the evaluated set.
bool is_optimal(const PlanEvaluation& pick, const std::vector<PlanEvaluation>& all) {
  if (!pick.compliant) return false;
  for (const auto& e : all) {
    if (e.compliant && e.loss < pick.loss) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("evaluate_plans for the decadal active flare at the public limit") {
  const Fixture f;
  const auto evals = evaluate_plans(f.ctx(), f.get("decadal-active"), 1e-3, f.menu);
  REQUIRE(evals.size() == 4);

  CHECK(evals[0].plan == MitigationPlan::proceed());
  CHECK(evals[0].dose_sv == 1.2e-3);
  CHECK_FALSE(evals[0].compliant);
  CHECK(evals[0].loss == Cents{0});
  CHECK(evals[0].band == DoseBand::exceeds_public);

  CHECK(evals[1].plan == MitigationPlan::descend(9.5));
  CHECK(evals[1].dose_sv == 4.5e-4);
  CHECK(evals[1].compliant);
  CHECK(evals[1].loss == Cents{468000});

  CHECK(evals[2].plan == MitigationPlan::descend(7.0));
  CHECK(evals[2].dose_sv == 1.2e-4);
  CHECK(evals[2].compliant);
  CHECK(evals[2].loss == Cents{621000});

  CHECK(evals[3].plan == MitigationPlan::cancel());
  CHECK(evals[3].dose_sv == 0.0);
  CHECK(evals[3].compliant);
  CHECK(evals[3].loss == Cents{2520000});
}

TEST_CASE("evaluate_plans orders candidates highest first and drops duplicates") {
  const Fixture f;
  const std::vector<double> menu{7.0, 9.5, 8.0, 9.5};
  const auto evals = evaluate_plans(f.ctx(), f.get("decadal-active"), 1e-3, menu);
  REQUIRE(evals.size() == 5);
  CHECK(*evals[1].plan.altitude_km == 9.5);
  CHECK(*evals[2].plan.altitude_km == 8.0);
  CHECK(*evals[3].plan.altitude_km == 7.0);
  CHECK(evals[4].plan.kind == PlanKind::cancel);

  CHECK_THROWS_AS((void)evaluate_plans(f.ctx(), f.get("decadal-active"), 1e-3, std::vector<double>{12.5}), DomainError);
  CHECK_THROWS_AS((void)evaluate_plans(f.ctx(), f.get("decadal-active"), 0.0, f.menu), DomainError);
  CHECK_THROWS_AS((void)evaluate_plans(f.ctx(), f.get("carrington"), 1e-3, f.menu), ConfigError);
}

TEST_CASE("a zero-dose scenario is compliant everywhere") {
  const Fixture f;
  const FlareScenario quiet{"quiet", "quiet", 1.0, 0.0, {}, 0.0, {}};
  for (const auto& e : evaluate_plans(f.ctx(), quiet, 1e-3, f.menu)) CHECK(e.compliant);
  CHECK(recommend(f.ctx(), quiet, 1e-3, f.menu).plan == MitigationPlan::proceed());
}

TEST_CASE("PMF at the public limit leaves only cancellation") {
  const Fixture f;
  const auto evals = evaluate_plans(f.ctx(), f.get("pmf"), 1e-3, f.menu);
  for (std::size_t i = 0; i + 1 < evals.size(); ++i) CHECK_FALSE(evals[i].compliant);
  CHECK(evals[2].dose_sv == doctest::Approx(0.05).epsilon(1e-12));
  const auto best = recommend(f.ctx(), f.get("pmf"), 1e-3, f.menu);
  CHECK(best.plan == MitigationPlan::cancel());
  CHECK(best.loss == Cents{2520000});
}

TEST_CASE("recommend") {
  const Fixture f;
  const auto at_public = recommend(f.ctx(), f.get("decadal-active"), 1e-3, f.menu);
  CHECK(at_public.plan == MitigationPlan::descend(9.5));
  CHECK(at_public.loss == Cents{468000});

  const auto at_occupational = recommend(f.ctx(), f.get("decadal-active"), 2e-2, f.menu);
  CHECK(at_occupational.plan == MitigationPlan::proceed());
  CHECK(at_occupational.loss == Cents{0});

  SUBCASE("boundary dose equal to the limit is flyable") {
    const auto best = recommend(f.ctx(), f.get("decadal-active"), 1.2e-3, f.menu);
    CHECK(best.plan == MitigationPlan::proceed());
  }
}

TEST_CASE("select_recommendation tie-breaks by altitude then plan kind") {
  PlanEvaluation proceed{MitigationPlan::proceed(), 0.0, DoseBand::below_public, true, Cents{100}};
  PlanEvaluation high{MitigationPlan::descend(10.0), 0.0, DoseBand::below_public, true, Cents{100}};
  PlanEvaluation low{MitigationPlan::descend(8.0), 0.0, DoseBand::below_public, true, Cents{100}};
  PlanEvaluation cancel{MitigationPlan::cancel(), 0.0, DoseBand::below_public, true, Cents{100}};
  CHECK(select_recommendation(std::vector{cancel, low, high}).plan == MitigationPlan::descend(10.0));
  CHECK(select_recommendation(std::vector{cancel, low, high, proceed}).plan == MitigationPlan::proceed());
  CHECK(select_recommendation(std::vector{cancel}).plan == MitigationPlan::cancel());
  PlanEvaluation bad = proceed;
  bad.compliant = false;
  CHECK_THROWS_AS((void)select_recommendation(std::vector{bad}), DomainError);
}

TEST_CASE("recommendation is optimal by brute force on random menus and limits") {
  const Fixture f;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> altitude(0.0, 11.99);
  std::uniform_real_distribution<double> log_limit(-5.0, 0.0);
  const char* ids[] = {"decadal-active", "pmf", "spot-max-active"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> menu(1 + trial % 5);
    for (auto& a : menu) a = altitude(rng);
    const double limit = std::pow(10.0, log_limit(rng));
    const auto& scenario = f.get(ids[trial % 3]);
    const auto all = evaluate_plans(f.ctx(), scenario, limit, menu);
    const auto pick = recommend(f.ctx(), scenario, limit, menu);
    CHECK(is_optimal(pick, all));
  }
}

TEST_CASE("adding a non-compliant candidate never changes the recommendation") {
  const Fixture f;
  const auto& s = f.get("decadal-active");
  const auto base = recommend(f.ctx(), s, 1e-3, f.menu);
  // 11.8 km is above the 1 mSv depth (11.535 km) and so non-compliant
  const std::vector<double> extended{9.5, 7.0, 11.8};
  const auto evals = evaluate_plans(f.ctx(), s, 1e-3, extended);
  CHECK_FALSE(evals[1].compliant);
  CHECK(recommend(f.ctx(), s, 1e-3, extended).plan == base.plan);
}

TEST_CASE("raising the limit never raises the recommended loss") {
  const Fixture f;
  for (const char* id : {"decadal-active", "pmf", "spot-max-active"}) {
    Cents previous{INT64_MAX};
    for (double limit : {1e-3, 2e-2, 1e-1}) {
      const auto best = recommend(f.ctx(), f.get(id), limit, f.menu);
      CHECK(best.loss <= previous);
      previous = best.loss;
    }
  }
}

TEST_CASE("optimal continuous altitude") {
  const Fixture f;
  const auto& decadal = f.get("decadal-active");
  const auto opt = optimal_continuous_altitude(f.ctx(), decadal, 1e-3);
  REQUIRE(opt);

  // grid oracle: highest altitude (1e-3 km steps) whose dose is within the limit
  const auto dose = [](double alt) { return oracle::decadal_active_dose(oracle::depth_at_altitude(alt)); };
  const double grid = oracle::highest_at_or_below(dose, 1e-3, 7.0, 12.0, 1e-3);
  CHECK(grid == doctest::Approx(11.535).epsilon(1e-9));
  CHECK(std::abs(opt->altitude_km - 11.535) <= 0.01);
  CHECK(std::abs(opt->altitude_km - grid) <= 0.01);
  CHECK(opt->depth_gcm2 == doctest::Approx(258.35095).epsilon(1e-6));
  CHECK(opt->dose_sv <= 1e-3);
  // paper convention: 258.35 / 234 = 1.104 -> 1.10 x $3,000
  CHECK(opt->loss == Cents{330000});

  SUBCASE("no descent needed when the reference altitude complies") {
    const auto top = optimal_continuous_altitude(f.ctx(), decadal, 2e-2);
    REQUIRE(top);
    CHECK(top->altitude_km == 12.0);
    CHECK(top->loss == Cents{0});
  }
  SUBCASE("PMF has no compliant altitude above 7 km") {
    CHECK_FALSE(optimal_continuous_altitude(f.ctx(), f.get("pmf"), 1e-3));
  }
}

TEST_CASE("continuous optimum is tight against the limit") {
  const Fixture f;
  const auto ctx = f.ctx();
  const DoseModel& model = f.dose_model;
  for (const char* id : {"decadal-active", "pmf", "spot-max-active"}) {
    const auto& s = f.get(id);
    const auto curve = event_curve(model, s, preferred_dose_mode(model, s));
    const auto dose_at = [&](double alt) { return curve.dose_at_depth(f.atmosphere.depth_at_altitude(alt)); };
    for (double log_limit = -4.5; log_limit <= 0.0; log_limit += 0.05) {
      const double limit = std::pow(10.0, log_limit);
      const auto opt = optimal_continuous_altitude(ctx, s, limit);
      if (!opt) {
        CHECK(dose_at(7.0) > limit);
        continue;
      }
      CHECK(dose_at(opt->altitude_km) <= limit);
      if (opt->altitude_km < 12.0) CHECK(dose_at(std::min(12.0, opt->altitude_km + 0.01)) > limit);
    }
  }
}
