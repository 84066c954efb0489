#include <doctest.h>

#include <cmath>

#include "aeroshield/actuarial.hpp"
#include "aeroshield/errors.hpp"

using namespace aeroshield;

namespace {

struct Fixture {
  AltitudeDepthTable atmosphere = AltitudeDepthTable::standard();
  DoseModel dose_model;
  DoseLimitPolicy policy;
  FlightCostConfig cost = FlightCostConfig::standard();
  std::vector<FlareScenario> all = builtin_scenarios();
  std::vector<double> menu{9.5, 7.0};

  [[nodiscard]] DecisionContext ctx() const { return {atmosphere, dose_model, policy, cost}; }
  [[nodiscard]] std::vector<FlareScenario> pick(std::initializer_list<const char*> ids) const {
    std::vector<FlareScenario> out;
    for (const char* id : ids) out.push_back(find_scenario(all, id));
    return out;
  }
};

}  // namespace

TEST_CASE("premium_exact") {
  CHECK(premium_exact(std::vector<RiskItem>{{"decadal", 0.1, Cents{468000}}}) == Cents{46800});
  CHECK(premium_exact(std::vector<RiskItem>{}) == Cents{0});
  // 0.006 * 2,520,000 + 0.0007 * 2,520,000 = 15,120 + 1,764
  CHECK(premium_exact(std::vector<RiskItem>{{"carrington", 0.006, Cents{2520000}},
                                           {"miyake", 0.0007, Cents{2520000}}}) == Cents{16884});
  CHECK_THROWS_AS((void)premium_exact(std::vector<RiskItem>{{"bad", -0.1, Cents{1}}}), DomainError);
  CHECK_THROWS_AS((void)premium_exact(std::vector<RiskItem>{{"bad", 0.1, Cents{-1}}}), DomainError);
}

TEST_CASE("premium_exact is linear in frequency and severity") {
  const std::vector<RiskItem> base{{"a", 0.1, Cents{468000}}, {"b", 0.006, Cents{2520000}}};
  const auto p = premium_exact(base).value();
  for (std::int64_t k : {0, 2, 10}) {
    auto by_freq = base;
    auto by_sev = base;
    for (auto& item : by_freq) item.annual_frequency *= static_cast<double>(k);
    for (auto& item : by_sev) item.severity = item.severity * k;
    CHECK(premium_exact(by_freq).value() == p * k);
    CHECK(premium_exact(by_sev).value() == p * k);
  }
}

TEST_CASE("mitigated_risk_items") {
  const Fixture f;
  const auto decadal = f.pick({"decadal-active"});

  const auto items = mitigated_risk_items(f.ctx(), decadal, 1e-3, f.menu, 1.0);
  REQUIRE(items.size() == 1);
  CHECK(items[0].annual_frequency == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(items[0].severity == Cents{468000});

  for (const auto& item : mitigated_risk_items(f.ctx(), f.pick({"decadal-active", "pmf"}), 1e-3, f.menu, 0.0)) {
    CHECK(item.annual_frequency == 0.0);
  }

  const auto occupational = mitigated_risk_items(f.ctx(), decadal, 2e-2, f.menu, 1.0);
  CHECK(occupational[0].annual_frequency == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(occupational[0].severity == Cents{0});

  CHECK_THROWS_AS((void)mitigated_risk_items(f.ctx(), decadal, 1e-3, f.menu, 1.5), DomainError);
  CHECK_THROWS_AS((void)mitigated_risk_items(f.ctx(), f.pick({"carrington"}), 1e-3, f.menu, 1.0), ConfigError);
}

TEST_CASE("premium_monte_carlo") {
  const Fixture f;
  const auto decadal = f.pick({"decadal-active"});

  SUBCASE("decadal only, 10,000 years, within 3 sigma of 46,800") {
    const auto quote = premium_monte_carlo(f.ctx(), decadal, 1e-3, f.menu, 1.0, 10000, 12345);
    // 3 * 468000 * sqrt(0.1 / 10000) = 4,440 cents
    CHECK(std::abs(quote.expected_annual_loss_cents - 46800.0) <= 3.0 * 468000.0 * std::sqrt(0.1 / 10000.0));
    CHECK(quote.standard_error_cents > 0.0);
    CHECK(quote.standard_error_cents == doctest::Approx(1480.0).epsilon(0.1));
    CHECK(quote.n_years == 10000);
    CHECK(quote.seed == 12345);
  }

  SUBCASE("empty scenario list") {
    const auto quote = premium_monte_carlo(f.ctx(), {}, 1e-3, f.menu, 1.0, 1000, 1);
    CHECK(quote.expected_annual_loss_cents == 0.0);
    CHECK(quote.standard_error_cents == 0.0);
  }

  SUBCASE("deterministic under a fixed seed") {
    const auto set = f.pick({"decadal-active", "pmf", "spot-max-active"});
    const auto a = premium_monte_carlo(f.ctx(), set, 1e-3, f.menu, 0.7, 2000, 5);
    const auto b = premium_monte_carlo(f.ctx(), set, 1e-3, f.menu, 0.7, 2000, 5);
    CHECK(a.expected_annual_loss_cents == b.expected_annual_loss_cents);
    CHECK(a.standard_error_cents == b.standard_error_cents);
  }

  SUBCASE("agrees with the exact premium within 3 standard errors") {
    for (double limit : {1e-3, 2e-2}) {
      for (const auto& set : {f.pick({"decadal-active"}), f.pick({"decadal-active", "pmf"}),
                              f.pick({"decadal-active", "pmf", "spot-max-active"})}) {
        const auto exact = premium_exact(mitigated_risk_items(f.ctx(), set, limit, f.menu, 1.0));
        const auto quote = premium_monte_carlo(f.ctx(), set, limit, f.menu, 1.0, 10000, 77);
        CHECK(std::abs(quote.expected_annual_loss_cents - static_cast<double>(exact.value())) <=
              3.0 * quote.standard_error_cents + 0.5);
      }
    }
  }

  CHECK_THROWS_AS((void)premium_monte_carlo(f.ctx(), decadal, 1e-3, f.menu, 1.0, 99, 1), DomainError);
}

TEST_CASE("premium falls as the policy limit rises") {
  const Fixture f;
  const auto set = f.pick({"decadal-active", "pmf", "spot-max-active"});
  Cents previous{INT64_MAX};
  for (double limit : {1e-3, 2e-2, 1e-1, 1.0}) {
    const auto p = premium_exact(mitigated_risk_items(f.ctx(), set, limit, f.menu, 1.0));
    CHECK(p <= previous);
    previous = p;
  }
}
