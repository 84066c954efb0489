#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aeroshield/decision_engine.hpp"
#include "aeroshield/money.hpp"

namespace aeroshield {

struct RiskItem {
  std::string label;
  double annual_frequency = 0.0;  // events per year
  Cents severity{0};              // loss per event
};

// Throws DomainError on negative frequency or severity.
void validate(const RiskItem& item);

// Sum of frequency x severity, rounded once to the nearest cent.
[[nodiscard]] Cents premium_exact(std::span<const RiskItem> items);

// One item per scenario: the recommended mitigation loss as severity and
// exposure_fraction / recurrence as frequency.
[[nodiscard]] std::vector<RiskItem> mitigated_risk_items(const DecisionContext& ctx,
                                                         std::span<const FlareScenario> scenarios,
                                                         double policy_limit_sv, std::span<const double> altitudes_km,
                                                         double exposure_fraction);

struct PremiumQuote {
  double expected_annual_loss_cents = 0.0;  // sample mean, unrounded
  double standard_error_cents = 0.0;
  std::size_t n_years = 0;
  std::uint64_t seed = 0;

  [[nodiscard]] Cents expected_annual_loss() const;
};

inline constexpr std::size_t kMinMonteCarloYears = 100;

// Simulates n_years of Poisson arrivals per scenario and charges each event its
// recommended mitigation loss times exposure_fraction. Standard error is the
// sample standard deviation of annual losses over sqrt(n_years).
[[nodiscard]] PremiumQuote premium_monte_carlo(const DecisionContext& ctx, std::span<const FlareScenario> scenarios,
                                               double policy_limit_sv, std::span<const double> altitudes_km,
                                               double exposure_fraction, std::size_t n_years, std::uint64_t seed);

}  // namespace aeroshield
