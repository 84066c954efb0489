#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aeroshield/atmosphere.hpp"
#include "aeroshield/flare_model.hpp"

namespace aeroshield {

// Terrestrial surface depth; the default lower bound for dose inversion.
inline constexpr double kSurfaceDepthGcm2 = 1037.0;

struct DepthDoseAnchor {
  double depth_gcm2 = 0.0;
  double dose_sv = 0.0;
};

/**
 * Event dose as a function of atmospheric depth.
 *
 * Between anchors the curve is exponential (ln dose linear in depth), which
 * reproduces every anchor exactly and stays strictly decreasing. Below the
 * deepest anchor the last segment's log-slope is continued; shallower than the
 * first anchor the curve is undefined.
 */
class DoseDepthProfile {
 public:
  // Throws ConfigError (field `field`) unless there are >= 2 anchors, depths
  // strictly increase, and doses are positive and strictly decreasing.
  DoseDepthProfile(std::string event_label, std::vector<DepthDoseAnchor> anchors,
                   const std::string& field = "dose_profiles");

  // {(234, 1.2e-3), (365, 4.5e-4), (484, 1.2e-4)}
  [[nodiscard]] static DoseDepthProfile decadal_active();

  [[nodiscard]] const std::string& event_label() const noexcept { return label_; }
  [[nodiscard]] std::span<const DepthDoseAnchor> anchors() const noexcept { return anchors_; }
  [[nodiscard]] double reference_depth() const noexcept { return anchors_.front().depth_gcm2; }
  [[nodiscard]] double reference_dose() const noexcept { return anchors_.front().dose_sv; }

  [[nodiscard]] bool is_extrapolated(double depth_gcm2) const noexcept {
    return depth_gcm2 > anchors_.back().depth_gcm2;
  }

  // Throws DomainError for depths shallower than the first anchor.
  [[nodiscard]] double dose_at_depth(double depth_gcm2) const;

  // Log-linear segment through one depth: ln dose = ln d0 - slope * (x - x0).
  struct Segment {
    double depth0;
    double log_dose0;
    double attenuation;  // per g/cm^2, > 0
  };
  [[nodiscard]] Segment segment_at(double depth_gcm2) const;

 private:
  std::string label_;
  std::vector<DepthDoseAnchor> anchors_;
};

enum class DepthSolveStatus {
  found,
  // The limit exceeds the curve's maximum: every depth in the domain already
  // complies, nothing shallower needs to be sought.
  above_curve,
};

struct DepthSolution {
  DepthSolveStatus status = DepthSolveStatus::found;
  double depth_gcm2 = 0.0;
};

// Depth at which `profile` (optionally multiplied by `scale`) equals `limit_sv`,
// solved analytically on the bracketing exponential segment. Limits below the
// curve's value at `floor_depth` are a DomainError.
[[nodiscard]] DepthSolution depth_for_dose_limit(const DoseDepthProfile& profile, double limit_sv,
                                                 double scale = 1.0,
                                                 double floor_depth = kSurfaceDepthGcm2);

// Linear energy-to-dose calibration at the shape profile's reference depth.
struct EnergyScaling {
  double kappa_sv_per_erg = 0.5 / 1.98e36;
  double reference_energy_erg = 1.98e36;
};

// Throws DomainError on negative energy or depth outside the profile domain.
[[nodiscard]] double dose_for_energy(const EnergyScaling& scaling, const DoseDepthProfile& shape,
                                     double energy_erg, double depth_gcm2);

enum class DoseMode {
  anchor,  // rescale the shape so its reference-depth dose equals the scenario's reference dose
  energy,  // kappa * energy * normalized shape (approximate)
};

// Shape, energy calibration and any per-scenario profiles, bundled for the
// engine. Scenario profiles (keyed by scenario id) are used as-is in anchor
// mode; every other scenario is a rescaled copy of `shape`.
struct DoseModel {
  DoseDepthProfile shape = DoseDepthProfile::decadal_active();
  EnergyScaling scaling{};
  std::map<std::string, DoseDepthProfile, std::less<>> scenario_profiles;
};

// A scenario's dose curve: `scale` times `profile`, returning exactly
// `reference_dose_sv` at the profile's reference depth. Non-owning; the
// profile must outlive the curve.
struct EventDoseCurve {
  const DoseDepthProfile* profile = nullptr;
  double scale = 1.0;
  double reference_dose_sv = 0.0;

  [[nodiscard]] double dose_at_depth(double depth_gcm2) const;
  [[nodiscard]] DepthSolution depth_for_limit(double limit_sv, double floor_depth = kSurfaceDepthGcm2) const;
};

[[nodiscard]] bool has_dose_data(const DoseModel& model, const FlareScenario& scenario, DoseMode mode);
[[nodiscard]] bool is_dose_computable(const DoseModel& model, const FlareScenario& scenario);

// Anchor mode when the scenario supports it, energy mode otherwise.
// Throws ConfigError when neither is available.
[[nodiscard]] DoseMode preferred_dose_mode(const DoseModel& model, const FlareScenario& scenario);

// Throws ConfigError when the scenario lacks the field the mode needs.
[[nodiscard]] EventDoseCurve event_curve(const DoseModel& model, const FlareScenario& scenario, DoseMode mode);

[[nodiscard]] double dose_for_event(const DoseModel& model, const AltitudeDepthTable& atmosphere,
                                    const FlareScenario& scenario, double altitude_km, DoseMode mode);

struct DoseLimitPolicy {
  double public_limit_sv = 1e-3;
  double occupational_limit_sv = 2e-2;
  double deterministic_limit_sv = 1e-1;
  double fatal_dose_sv = 10.0;
  double background_annual_sv = 2.4e-3;  // informational
};

// Throws ConfigError unless 0 < public < occupational < deterministic < fatal.
void validate(const DoseLimitPolicy& policy);

enum class DoseBand {
  below_public,
  exceeds_public,
  exceeds_occupational,
  exceeds_deterministic,
  fatal,
};

[[nodiscard]] std::string_view to_string(DoseBand band) noexcept;

// Thresholds are inclusive: a dose equal to a limit is in that limit's band.
[[nodiscard]] DoseBand classify_dose(double dose_sv, const DoseLimitPolicy& policy);

// "0.450 mSv": three significant figures.
[[nodiscard]] std::string format_msv(double dose_sv);

}  // namespace aeroshield
