#pragma once

#include <span>
#include <vector>

namespace aeroshield {

struct AltitudeDepthAnchor {
  double altitude_km = 0.0;
  double depth_gcm2 = 0.0;
};

// Piecewise-linear map between flight altitude (km) and overhead atmospheric
// depth (g/cm^2). Anchors are stored highest altitude first; depth increases
// strictly as altitude decreases. Altitudes above the highest anchor are
// rejected, never extrapolated.
class AltitudeDepthTable {
 public:
  // Throws ConfigError (field "atmosphere.anchors") on fewer than two anchors,
  // non-monotone anchors, or a reference altitude outside the table.
  AltitudeDepthTable(std::vector<AltitudeDepthAnchor> anchors, double reference_altitude_km = 12.0);

  // {(12, 234), (9.5, 365), (7, 484), (0, 1037)}, reference 12 km.
  [[nodiscard]] static AltitudeDepthTable standard();

  [[nodiscard]] std::span<const AltitudeDepthAnchor> anchors() const noexcept { return anchors_; }
  [[nodiscard]] double reference_altitude_km() const noexcept { return reference_altitude_km_; }
  [[nodiscard]] double ceiling_km() const noexcept { return anchors_.front().altitude_km; }
  [[nodiscard]] double floor_km() const noexcept { return anchors_.back().altitude_km; }
  [[nodiscard]] double min_depth() const noexcept { return anchors_.front().depth_gcm2; }
  [[nodiscard]] double max_depth() const noexcept { return anchors_.back().depth_gcm2; }

  [[nodiscard]] double depth_at_altitude(double altitude_km) const;
  [[nodiscard]] double altitude_at_depth(double depth_gcm2) const;

 private:
  std::vector<AltitudeDepthAnchor> anchors_;
  double reference_altitude_km_;
};

enum class MultiplierMode {
  exact,  // depth(altitude) / depth(reference altitude)
  paper,  // the same ratio rounded to two decimals (365/234 -> 1.56)
};

// Fuel-cost multiplier under the rule that fuel burn scales with overhead depth.
[[nodiscard]] double fuel_multiplier(const AltitudeDepthTable& table, double altitude_km, MultiplierMode mode);

}  // namespace aeroshield
