#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "aeroshield/atmosphere.hpp"
#include "aeroshield/money.hpp"

namespace aeroshield {

// Per-flight economics for a reference New York - San Francisco flight.
struct FlightCostConfig {
  std::map<std::string, Cents, std::less<>> line_items;
  Cents fare{0};
  std::int64_t seats = 0;

  // fuel $3,000; crew $640; JFK $1,089; SFO $1,005; tax $15.60; aircraft $1,783;
  // ground personnel $4,000; insurance $288; fare $175; 144 seats.
  [[nodiscard]] static FlightCostConfig standard();

  // Zero when the item is absent.
  [[nodiscard]] Cents item(std::string_view name) const;
};

inline constexpr std::string_view kFuelItem = "fuel";

// Throws ConfigError on negative amounts or seat count.
void validate(const FlightCostConfig& config);

[[nodiscard]] Cents operating_cost_total(const FlightCostConfig& config);

// Ticket revenue forgone when the flight is cancelled.
[[nodiscard]] Cents cancellation_loss(const FlightCostConfig& config);

enum class LossConvention {
  paper,        // the whole multiplied fuel bill counts as loss
  incremental,  // only the fuel increase counts
};

// Throws DomainError for multipliers below 1.
[[nodiscard]] Cents altitude_change_loss(const FlightCostConfig& config, double multiplier, LossConvention convention);

enum class PlanKind { proceed, descend, cancel };

[[nodiscard]] std::string_view to_string(PlanKind kind) noexcept;

struct MitigationPlan {
  PlanKind kind = PlanKind::proceed;
  std::optional<double> altitude_km;  // descend only

  [[nodiscard]] static MitigationPlan proceed() { return {PlanKind::proceed, std::nullopt}; }
  [[nodiscard]] static MitigationPlan descend(double altitude_km) { return {PlanKind::descend, altitude_km}; }
  [[nodiscard]] static MitigationPlan cancel() { return {PlanKind::cancel, std::nullopt}; }

  friend bool operator==(const MitigationPlan&, const MitigationPlan&) = default;
};

// Throws DomainError unless a descend plan targets an altitude strictly below
// the reference altitude and inside the table.
void validate(const MitigationPlan& plan, const AltitudeDepthTable& atmosphere);

// "proceed", "descend 9.5 km", "cancel".
[[nodiscard]] std::string describe(const MitigationPlan& plan);

// Paper convention pairs with two-decimal multipliers, incremental with exact ones.
[[nodiscard]] Cents plan_loss(const MitigationPlan& plan, const FlightCostConfig& config,
                              const AltitudeDepthTable& atmosphere, LossConvention convention);

}  // namespace aeroshield
