#include <doctest.h>

#include "aeroshield/cost_model.hpp"
#include "aeroshield/errors.hpp"

using namespace aeroshield;

TEST_CASE("operating cost total is the exact column sum") {
  auto config = FlightCostConfig::standard();
  // 3000 + 640 + 1089 + 1005 + 15.60 + 1783 + 4000 + 288 = 11,820.60
  CHECK(operating_cost_total(config) == Cents{1182060});
  CHECK(operating_cost_total(config).usd_string() == "$11,820.60");

  config.line_items.erase("tax");
  CHECK(operating_cost_total(config) == Cents{1180500});

  FlightCostConfig zero;
  zero.line_items = {{"fuel", Cents{0}}, {"crew", Cents{0}}};
  CHECK(operating_cost_total(zero) == Cents{0});
}

TEST_CASE("cancellation loss is fare times seats") {
  auto config = FlightCostConfig::standard();
  CHECK(cancellation_loss(config) == Cents{2520000});
  config.fare = Cents::from_usd(200);
  CHECK(cancellation_loss(config) == Cents{2880000});
  config.seats = 0;
  CHECK(cancellation_loss(config) == Cents{0});
}

TEST_CASE("altitude change loss under both conventions") {
  const auto config = FlightCostConfig::standard();
  CHECK(altitude_change_loss(config, 1.56, LossConvention::paper) == Cents{468000});
  CHECK(altitude_change_loss(config, 2.07, LossConvention::paper) == Cents{621000});
  CHECK(altitude_change_loss(config, 1.56, LossConvention::incremental) == Cents{168000});
  CHECK(altitude_change_loss(config, 1.0, LossConvention::incremental) == Cents{0});
  CHECK_THROWS_AS((void)altitude_change_loss(config, 0.99, LossConvention::paper), DomainError);

  for (auto convention : {LossConvention::paper, LossConvention::incremental}) {
    Cents previous{-1};
    for (double m = 1.0; m <= 5.0; m += 0.01) {
      const Cents loss = altitude_change_loss(config, m, convention);
      CHECK(loss >= previous);
      previous = loss;
    }
  }
}

TEST_CASE("plan_loss") {
  const auto config = FlightCostConfig::standard();
  const auto atm = AltitudeDepthTable::standard();
  CHECK(plan_loss(MitigationPlan::descend(9.5), config, atm, LossConvention::paper) == Cents{468000});
  CHECK(plan_loss(MitigationPlan::descend(7.0), config, atm, LossConvention::paper) == Cents{621000});
  CHECK(plan_loss(MitigationPlan::proceed(), config, atm, LossConvention::paper) == Cents{0});
  CHECK(plan_loss(MitigationPlan::cancel(), config, atm, LossConvention::paper) == Cents{2520000});
  // incremental uses the exact ratio: 300000 * (365/234 - 1) = 167948.72...
  CHECK(plan_loss(MitigationPlan::descend(9.5), config, atm, LossConvention::incremental) == Cents{167949});

  const auto cancel = plan_loss(MitigationPlan::cancel(), config, atm, LossConvention::paper);
  const auto low = plan_loss(MitigationPlan::descend(7.0), config, atm, LossConvention::paper);
  const auto mid = plan_loss(MitigationPlan::descend(9.5), config, atm, LossConvention::paper);
  const auto stay = plan_loss(MitigationPlan::proceed(), config, atm, LossConvention::paper);
  CHECK(cancel > low);
  CHECK(low > mid);
  CHECK(mid > stay);

  CHECK_THROWS_AS((void)plan_loss(MitigationPlan::descend(12.0), config, atm, LossConvention::paper), DomainError);
  CHECK_THROWS_AS((void)plan_loss(MitigationPlan::descend(-1.0), config, atm, LossConvention::paper), DomainError);
  CHECK_THROWS_AS((void)plan_loss(MitigationPlan{PlanKind::descend, std::nullopt}, config, atm, LossConvention::paper),
                  DomainError);
}

TEST_CASE("describe") {
  CHECK(describe(MitigationPlan::descend(9.5)) == "descend 9.5 km");
  CHECK(describe(MitigationPlan::proceed()) == "proceed");
  CHECK(describe(MitigationPlan::cancel()) == "cancel");
}

TEST_CASE("cost validation") {
  auto config = FlightCostConfig::standard();
  CHECK_NOTHROW(validate(config));
  config.seats = -1;
  CHECK_THROWS_AS(validate(config), ConfigError);
  config = FlightCostConfig::standard();
  config.line_items["fuel"] = Cents{-5};
  CHECK_THROWS_AS(validate(config), ConfigError);
}
