#include "aeroshield/atmosphere.hpp"

#include <cmath>
#include <string>

#include "aeroshield/errors.hpp"

namespace aeroshield {

namespace {

constexpr const char* kAnchorsField = "atmosphere.anchors";

double lerp(double x0, double y0, double x1, double y1, double x) {
  return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

}  // namespace

AltitudeDepthTable::AltitudeDepthTable(std::vector<AltitudeDepthAnchor> anchors,
                                       double reference_altitude_km)
    : anchors_(std::move(anchors)), reference_altitude_km_(reference_altitude_km) {
  if (anchors_.size() < 2) {
    throw ConfigError("at least two anchors are required", kAnchorsField);
  }
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const auto& a = anchors_[i];
    if (!std::isfinite(a.altitude_km) || !std::isfinite(a.depth_gcm2) || a.depth_gcm2 <= 0.0 ||
        a.altitude_km < 0.0) {
      throw ConfigError("anchor " + std::to_string(i) + " must have altitude >= 0 and depth > 0",
                        kAnchorsField);
    }
    if (i > 0) {
      const auto& prev = anchors_[i - 1];
      if (!(a.altitude_km < prev.altitude_km)) {
        throw ConfigError("altitudes must be strictly decreasing", kAnchorsField);
      }
      if (!(a.depth_gcm2 > prev.depth_gcm2)) {
        throw ConfigError("depths must be strictly increasing", kAnchorsField);
      }
    }
  }
  if (!(reference_altitude_km_ <= ceiling_km() && reference_altitude_km_ >= floor_km())) {
    throw ConfigError("reference altitude must lie within the anchor range",
                      "atmosphere.reference_altitude_km");
  }
}

AltitudeDepthTable AltitudeDepthTable::standard() {
  return AltitudeDepthTable({{12.0, 234.0}, {9.5, 365.0}, {7.0, 484.0}, {0.0, 1037.0}}, 12.0);
}

double AltitudeDepthTable::depth_at_altitude(double altitude_km) const {
  if (!(altitude_km >= floor_km() && altitude_km <= ceiling_km())) {
    throw DomainError("altitude " + std::to_string(altitude_km) + " km outside table range [" +
                      std::to_string(floor_km()) + ", " + std::to_string(ceiling_km()) + "]");
  }
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    const auto& hi = anchors_[i - 1];
    const auto& lo = anchors_[i];
    if (altitude_km == hi.altitude_km) return hi.depth_gcm2;
    if (altitude_km == lo.altitude_km) return lo.depth_gcm2;
    if (altitude_km > lo.altitude_km) {
      return lerp(hi.altitude_km, hi.depth_gcm2, lo.altitude_km, lo.depth_gcm2, altitude_km);
    }
  }
  return anchors_.back().depth_gcm2;
}

double AltitudeDepthTable::altitude_at_depth(double depth_gcm2) const {
  if (!(depth_gcm2 >= min_depth() && depth_gcm2 <= max_depth())) {
    throw DomainError("depth " + std::to_string(depth_gcm2) + " g/cm2 outside table range [" +
                      std::to_string(min_depth()) + ", " + std::to_string(max_depth()) + "]");
  }
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    const auto& hi = anchors_[i - 1];
    const auto& lo = anchors_[i];
    if (depth_gcm2 == hi.depth_gcm2) return hi.altitude_km;
    if (depth_gcm2 == lo.depth_gcm2) return lo.altitude_km;
    if (depth_gcm2 < lo.depth_gcm2) {
      return lerp(hi.depth_gcm2, hi.altitude_km, lo.depth_gcm2, lo.altitude_km, depth_gcm2);
    }
  }
  return anchors_.back().altitude_km;
}

double fuel_multiplier(const AltitudeDepthTable& table, double altitude_km, MultiplierMode mode) {
  const double ratio =
      table.depth_at_altitude(altitude_km) / table.depth_at_altitude(table.reference_altitude_km());
  if (mode == MultiplierMode::paper) {
    return std::round(ratio * 100.0) / 100.0;
  }
  return ratio;
}

}  // namespace aeroshield
