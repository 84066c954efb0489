#include "aeroshield/cost_model.hpp"

#include <cstdio>

#include "aeroshield/errors.hpp"

namespace aeroshield {

FlightCostConfig FlightCostConfig::standard() {
  FlightCostConfig config;
  config.line_items = {
      {"fuel", Cents{300000}},          {"crew", Cents{64000}},
      {"airport_origin", Cents{108900}}, {"airport_destination", Cents{100500}},
      {"tax", Cents{1560}},             {"aircraft", Cents{178300}},
      {"ground_personnel", Cents{400000}}, {"insurance", Cents{28800}},
  };
  config.fare = Cents{17500};
  config.seats = 144;
  return config;
}

Cents FlightCostConfig::item(std::string_view name) const {
  const auto it = line_items.find(name);
  return it == line_items.end() ? Cents{0} : it->second;
}

void validate(const FlightCostConfig& config) {
  for (const auto& [name, amount] : config.line_items) {
    if (amount < Cents{0}) throw ConfigError("amount must be >= 0", "cost.line_items." + name);
  }
  if (config.fare < Cents{0}) throw ConfigError("must be >= 0", "cost.fare_usd");
  if (config.seats < 0) throw ConfigError("must be >= 0", "cost.seats");
}

Cents operating_cost_total(const FlightCostConfig& config) {
  Cents total{0};
  for (const auto& [name, amount] : config.line_items) total += amount;
  return total;
}

Cents cancellation_loss(const FlightCostConfig& config) { return config.fare * config.seats; }

Cents altitude_change_loss(const FlightCostConfig& config, double multiplier, LossConvention convention) {
  if (!(multiplier >= 1.0)) throw DomainError("fuel multiplier must be >= 1");
  const Cents fuel = config.item(kFuelItem);
  return convention == LossConvention::paper ? fuel.scaled(multiplier) : fuel.scaled(multiplier - 1.0);
}

std::string_view to_string(PlanKind kind) noexcept {
  switch (kind) {
    case PlanKind::proceed: return "proceed";
    case PlanKind::descend: return "descend";
    case PlanKind::cancel: return "cancel";
  }
  return "unknown";
}

void validate(const MitigationPlan& plan, const AltitudeDepthTable& atmosphere) {
  if (plan.kind != PlanKind::descend) return;
  if (!plan.altitude_km) throw DomainError("descend plan needs a target altitude");
  const double alt = *plan.altitude_km;
  if (!(alt < atmosphere.reference_altitude_km() && alt >= atmosphere.floor_km())) {
    throw DomainError("descend altitude " + std::to_string(alt) + " km must be below the reference altitude " +
                      std::to_string(atmosphere.reference_altitude_km()) + " km and inside the table");
  }
}

std::string describe(const MitigationPlan& plan) {
  if (plan.kind != PlanKind::descend || !plan.altitude_km) return std::string(to_string(plan.kind));
  char buf[64];
  std::snprintf(buf, sizeof buf, "descend %g km", *plan.altitude_km);
  return buf;
}

Cents plan_loss(const MitigationPlan& plan, const FlightCostConfig& config, const AltitudeDepthTable& atmosphere,
                LossConvention convention) {
  validate(plan, atmosphere);
  switch (plan.kind) {
    case PlanKind::proceed:
      return Cents{0};
    case PlanKind::cancel:
      return cancellation_loss(config);
    case PlanKind::descend: {
      const auto mode = convention == LossConvention::paper ? MultiplierMode::paper : MultiplierMode::exact;
      return altitude_change_loss(config, fuel_multiplier(atmosphere, *plan.altitude_km, mode), convention);
    }
  }
  return Cents{0};
}

}  // namespace aeroshield
