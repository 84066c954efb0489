#include "aeroshield/dose_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "aeroshield/errors.hpp"

namespace aeroshield {

// --- DoseDepthProfile -------------------------------------------------------

DoseDepthProfile::DoseDepthProfile(std::string event_label, std::vector<DepthDoseAnchor> anchors,
                                   const std::string& field)
    : label_(std::move(event_label)), anchors_(std::move(anchors)) {
  if (anchors_.size() < 2) throw ConfigError("at least two anchors are required", field);
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const auto& a = anchors_[i];
    if (!(std::isfinite(a.depth_gcm2) && a.depth_gcm2 > 0.0)) {
      throw ConfigError("depths must be > 0", field);
    }
    if (!(std::isfinite(a.dose_sv) && a.dose_sv > 0.0)) {
      throw ConfigError("doses must be > 0", field);
    }
    if (i > 0 && !(a.depth_gcm2 > anchors_[i - 1].depth_gcm2)) {
      throw ConfigError("depths must be strictly increasing", field);
    }
    if (i > 0 && !(a.dose_sv < anchors_[i - 1].dose_sv)) {
      throw ConfigError("doses must be strictly decreasing", field);
    }
  }
}

DoseDepthProfile DoseDepthProfile::decadal_active() {
  return DoseDepthProfile("decadal-active", {{234.0, 1.2e-3}, {365.0, 4.5e-4}, {484.0, 1.2e-4}});
}

DoseDepthProfile::Segment DoseDepthProfile::segment_at(double depth_gcm2) const {
  std::size_t i = 1;
  while (i + 1 < anchors_.size() && depth_gcm2 >= anchors_[i].depth_gcm2) ++i;
  const auto& a = anchors_[i - 1];
  const auto& b = anchors_[i];
  const double log_a = std::log(a.dose_sv);
  return {a.depth_gcm2, log_a, (log_a - std::log(b.dose_sv)) / (b.depth_gcm2 - a.depth_gcm2)};
}

double DoseDepthProfile::dose_at_depth(double depth_gcm2) const {
  if (!(depth_gcm2 >= reference_depth())) {
    throw DomainError("depth " + std::to_string(depth_gcm2) +
                      " g/cm2 is shallower than the profile's first anchor");
  }
  for (const auto& a : anchors_) {
    if (a.depth_gcm2 == depth_gcm2) return a.dose_sv;
  }
  const Segment seg = segment_at(depth_gcm2);
  return std::exp(seg.log_dose0 - seg.attenuation * (depth_gcm2 - seg.depth0));
}

DepthSolution depth_for_dose_limit(const DoseDepthProfile& profile, double limit_sv, double scale,
                                   double floor_depth) {
  if (!(std::isfinite(limit_sv) && limit_sv > 0.0)) throw DomainError("dose limit must be > 0");
  if (!(std::isfinite(scale) && scale >= 0.0)) throw DomainError("profile scale must be >= 0");

  const auto anchors = profile.anchors();
  if (scale == 0.0 || limit_sv > scale * profile.reference_dose()) {
    return {DepthSolveStatus::above_curve, profile.reference_depth()};
  }
  for (const auto& a : anchors) {
    if (scale * a.dose_sv == limit_sv) return {DepthSolveStatus::found, a.depth_gcm2};
  }
  const double target = limit_sv / scale;
  if (target < profile.dose_at_depth(floor_depth)) {
    throw DomainError("dose limit is below the curve's value at depth " + std::to_string(floor_depth));
  }

  // Bracketing anchor pair, or the last pair when the target lies in the
  // extrapolated tail.
  std::size_t i = 1;
  while (i + 1 < anchors.size() && target < anchors[i].dose_sv) ++i;
  const auto seg = profile.segment_at(anchors[i - 1].depth_gcm2);
  return {DepthSolveStatus::found, seg.depth0 + (seg.log_dose0 - std::log(target)) / seg.attenuation};
}

// --- energy scaling ---------------------------------------------------------

double dose_for_energy(const EnergyScaling& scaling, const DoseDepthProfile& shape, double energy_erg,
                       double depth_gcm2) {
  if (!(std::isfinite(energy_erg) && energy_erg >= 0.0)) throw DomainError("energy must be >= 0");
  const double shape_ratio = shape.dose_at_depth(depth_gcm2) / shape.reference_dose();
  // energy last, so the result is exactly linear in energy whenever the
  // energy scaling itself is exact
  return energy_erg * (scaling.kappa_sv_per_erg * shape_ratio);
}

// --- scenario curves --------------------------------------------------------

double EventDoseCurve::dose_at_depth(double depth_gcm2) const {
  const double base = profile->dose_at_depth(depth_gcm2);
  if (depth_gcm2 == profile->reference_depth()) return reference_dose_sv;
  return scale * base;
}

DepthSolution EventDoseCurve::depth_for_limit(double limit_sv, double floor_depth) const {
  if (limit_sv == reference_dose_sv && limit_sv > 0.0) {
    return {DepthSolveStatus::found, profile->reference_depth()};
  }
  return depth_for_dose_limit(*profile, limit_sv, scale, floor_depth);
}

bool has_dose_data(const DoseModel& model, const FlareScenario& scenario, DoseMode mode) {
  switch (mode) {
    case DoseMode::anchor:
      return scenario.reference_dose_sv.has_value() || model.scenario_profiles.contains(scenario.id);
    case DoseMode::energy:
      return scenario.energy_erg.has_value();
  }
  return false;
}

bool is_dose_computable(const DoseModel& model, const FlareScenario& scenario) {
  return has_dose_data(model, scenario, DoseMode::anchor) || has_dose_data(model, scenario, DoseMode::energy);
}

DoseMode preferred_dose_mode(const DoseModel& model, const FlareScenario& scenario) {
  if (has_dose_data(model, scenario, DoseMode::anchor)) return DoseMode::anchor;
  if (has_dose_data(model, scenario, DoseMode::energy)) return DoseMode::energy;
  throw ConfigError("scenario has neither reference_dose_sv, energy_erg nor a dose profile",
                    "scenarios[" + scenario.id + "]");
}

EventDoseCurve event_curve(const DoseModel& model, const FlareScenario& scenario, DoseMode mode) {
  const std::string field = "scenarios[" + scenario.id + "]";
  if (mode == DoseMode::anchor) {
    if (const auto it = model.scenario_profiles.find(scenario.id); it != model.scenario_profiles.end()) {
      return {&it->second, 1.0, it->second.reference_dose()};
    }
    if (!scenario.reference_dose_sv) {
      throw ConfigError("anchor mode requires reference_dose_sv", field + ".reference_dose_sv");
    }
    const double ref = *scenario.reference_dose_sv;
    return {&model.shape, ref / model.shape.reference_dose(), ref};
  }
  if (!scenario.energy_erg) throw ConfigError("energy mode requires energy_erg", field + ".energy_erg");
  const double ref = dose_for_energy(model.scaling, model.shape, *scenario.energy_erg, model.shape.reference_depth());
  return {&model.shape, ref / model.shape.reference_dose(), ref};
}

double dose_for_event(const DoseModel& model, const AltitudeDepthTable& atmosphere, const FlareScenario& scenario,
                      double altitude_km, DoseMode mode) {
  const EventDoseCurve curve = event_curve(model, scenario, mode);
  return curve.dose_at_depth(atmosphere.depth_at_altitude(altitude_km));
}

// --- policy -----------------------------------------------------------------

void validate(const DoseLimitPolicy& p) {
  if (!(p.public_limit_sv > 0.0 && p.public_limit_sv < p.occupational_limit_sv &&
        p.occupational_limit_sv < p.deterministic_limit_sv && p.deterministic_limit_sv < p.fatal_dose_sv)) {
    throw ConfigError("limits must satisfy 0 < public < occupational < deterministic < fatal", "policy");
  }
  if (!(p.background_annual_sv >= 0.0)) throw ConfigError("must be >= 0", "policy.background_annual_sv");
}

std::string_view to_string(DoseBand band) noexcept {
  switch (band) {
    case DoseBand::below_public: return "below-public";
    case DoseBand::exceeds_public: return "exceeds-public";
    case DoseBand::exceeds_occupational: return "exceeds-occupational";
    case DoseBand::exceeds_deterministic: return "exceeds-deterministic";
    case DoseBand::fatal: return "fatal";
  }
  return "unknown";
}

DoseBand classify_dose(double dose_sv, const DoseLimitPolicy& policy) {
  if (!(dose_sv >= 0.0)) throw DomainError("dose must be >= 0");
  if (dose_sv >= policy.fatal_dose_sv) return DoseBand::fatal;
  if (dose_sv >= policy.deterministic_limit_sv) return DoseBand::exceeds_deterministic;
  if (dose_sv >= policy.occupational_limit_sv) return DoseBand::exceeds_occupational;
  if (dose_sv >= policy.public_limit_sv) return DoseBand::exceeds_public;
  return DoseBand::below_public;
}

std::string format_msv(double dose_sv) {
  const double msv = dose_sv * 1e3;
  char buf[64];
  if (msv == 0.0 || !std::isfinite(msv)) {
    std::snprintf(buf, sizeof buf, "%.2f mSv", msv);
    return buf;
  }
  int magnitude = static_cast<int>(std::floor(std::log10(std::abs(msv))));
  int decimals = std::max(0, 2 - magnitude);
  // 9.996 rounds up to 10.0; one fewer decimal keeps three figures
  if (std::abs(std::round(msv * std::pow(10.0, decimals))) >= std::pow(10.0, 3)) {
    decimals = std::max(0, decimals - 1);
  }
  std::snprintf(buf, sizeof buf, "%.*f mSv", decimals, msv);
  return buf;
}

}  // namespace aeroshield
