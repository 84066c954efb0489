#include "aeroshield/actuarial.hpp"

#include <cmath>

#include "aeroshield/errors.hpp"

namespace aeroshield {

namespace {

void check_exposure(double exposure_fraction) {
  if (!(exposure_fraction >= 0.0 && exposure_fraction <= 1.0)) {
    throw DomainError("exposure_fraction must lie in [0, 1]");
  }
}

}  // namespace

void validate(const RiskItem& item) {
  if (!(std::isfinite(item.annual_frequency) && item.annual_frequency >= 0.0)) {
    throw DomainError("risk item '" + item.label + "' has negative frequency");
  }
  if (item.severity < Cents{0}) throw DomainError("risk item '" + item.label + "' has negative severity");
}

Cents premium_exact(std::span<const RiskItem> items) {
  double total = 0.0;
  for (const auto& item : items) {
    validate(item);
    total += item.annual_frequency * static_cast<double>(item.severity.value());
  }
  return Cents{std::llround(total)};
}

std::vector<RiskItem> mitigated_risk_items(const DecisionContext& ctx, std::span<const FlareScenario> scenarios,
                                           double policy_limit_sv, std::span<const double> altitudes_km,
                                           double exposure_fraction) {
  check_exposure(exposure_fraction);
  std::vector<RiskItem> items;
  items.reserve(scenarios.size());
  for (const auto& scenario : scenarios) {
    const PlanEvaluation best = recommend(ctx, scenario, policy_limit_sv, altitudes_km);
    items.push_back({scenario.id, exposure_fraction / scenario.recurrence_years, best.loss});
  }
  return items;
}

Cents PremiumQuote::expected_annual_loss() const { return Cents{std::llround(expected_annual_loss_cents)}; }

PremiumQuote premium_monte_carlo(const DecisionContext& ctx, std::span<const FlareScenario> scenarios,
                                 double policy_limit_sv, std::span<const double> altitudes_km,
                                 double exposure_fraction, std::size_t n_years, std::uint64_t seed) {
  check_exposure(exposure_fraction);
  if (n_years < kMinMonteCarloYears) {
    throw DomainError("Monte Carlo premium needs at least " + std::to_string(kMinMonteCarloYears) + " years");
  }

  std::vector<double> severity;
  severity.reserve(scenarios.size());
  for (const auto& scenario : scenarios) {
    const double loss = static_cast<double>(recommend(ctx, scenario, policy_limit_sv, altitudes_km).loss.value());
    severity.push_back(loss * exposure_fraction);
  }

  const EventSample sample = sample_years(scenarios, n_years, seed);

  // Welford's running mean and variance over annual losses.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t y = 0; y < n_years; ++y) {
    double annual = 0.0;
    for (std::size_t s = 0; s < scenarios.size(); ++s) annual += sample.count(y, s) * severity[s];
    const double delta = annual - mean;
    mean += delta / static_cast<double>(y + 1);
    m2 += delta * (annual - mean);
  }
  const double n = static_cast<double>(n_years);
  const double sample_sd = std::sqrt(m2 / (n - 1.0));

  PremiumQuote quote;
  quote.expected_annual_loss_cents = mean;
  quote.standard_error_cents = sample_sd / std::sqrt(n);
  quote.n_years = n_years;
  quote.seed = seed;
  return quote;
}

}  // namespace aeroshield
