#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aeroshield {

// A named flare event class. Energy and reference dose are optional; a
// scenario needs at least one of them (or a dedicated dose profile) before it
// can be used for dose computation.
struct FlareScenario {
  std::string id;
  std::string label;
  double recurrence_years = 1.0;
  double sunspot_area_fraction = 0.0;
  std::optional<double> energy_erg;
  std::optional<double> reference_dose_sv;  // at the reference depth (234 g/cm^2)
  std::optional<double> x_magnitude;        // X-class, for catalog-calibrated events

  [[nodiscard]] double annual_rate() const noexcept { return 1.0 / recurrence_years; }
};

// Throws ConfigError naming `field` when a scenario violates its invariants.
void validate(const FlareScenario& scenario, const std::string& field = "scenarios");

// Ten built-in scenarios: {tenth-year, annual, decadal} x {normal, active},
// spot-max-active, pmf, carrington, miyake.
[[nodiscard]] std::vector<FlareScenario> builtin_scenarios();

// Throws NotFoundError.
[[nodiscard]] const FlareScenario& find_scenario(std::span<const FlareScenario> scenarios, std::string_view id);

struct FrequencyPoint {
  double x_magnitude = 0.0;
  double annual_probability = 0.0;
};

enum class FrequencyInterpolation { piecewise_loglog, least_squares_powerlaw };

// Annual exceedance probability as a function of X-class magnitude, calibrated
// on a handful of historical events.
class FrequencyCatalog {
 public:
  // Throws ConfigError (field "frequency_points") unless magnitudes strictly
  // increase, probabilities strictly decrease, and all probabilities are in (0, 1].
  explicit FrequencyCatalog(std::vector<FrequencyPoint> points,
                            FrequencyInterpolation mode = FrequencyInterpolation::piecewise_loglog);

  // {(13, 0.4), (45, 0.006), (1001, 0.0007)}
  [[nodiscard]] static FrequencyCatalog standard();

  [[nodiscard]] std::span<const FrequencyPoint> points() const noexcept { return points_; }
  [[nodiscard]] FrequencyInterpolation mode() const noexcept { return mode_; }

  [[nodiscard]] double annual_exceedance_probability(double x_magnitude) const;
  [[nodiscard]] double return_period_years(double x_magnitude) const;
  [[nodiscard]] double magnitude_at_probability(double probability) const;

 private:
  // log10 P as an affine function of log10 x on one segment.
  struct LogLine {
    double intercept;
    double slope;
    [[nodiscard]] double at(double log_x) const noexcept { return intercept + slope * log_x; }
  };
  [[nodiscard]] LogLine segment_for_magnitude(double log_x) const;
  [[nodiscard]] LogLine segment_for_probability(double log_p) const;

  std::vector<FrequencyPoint> points_;
  FrequencyInterpolation mode_;
  LogLine fit_{0.0, 0.0};
};

struct GleRecord {
  std::string id;
  int year = 0;
  double x_magnitude = 0.0;
};

// Historical events that anchor the X-class scale.
[[nodiscard]] std::vector<GleRecord> calibration_records();

// Number of records with magnitude >= x.
[[nodiscard]] std::size_t count_at_least(std::span<const GleRecord> records, double x_magnitude);

// Poisson event counts drawn for `n_years` simulated years. Each scenario owns
// an independent random stream keyed by (seed, scenario id), so a scenario's
// counts do not depend on which other scenarios are sampled alongside it.
class EventSample {
 public:
  EventSample(std::size_t n_years, std::size_t n_scenarios);

  [[nodiscard]] std::size_t years() const noexcept { return n_years_; }
  [[nodiscard]] std::size_t scenarios() const noexcept { return n_scenarios_; }
  [[nodiscard]] std::uint32_t count(std::size_t year, std::size_t scenario) const;
  void set_count(std::size_t year, std::size_t scenario, std::uint32_t value);

  // Scenario indices of the events in one year, one entry per event.
  [[nodiscard]] std::vector<std::size_t> events_in_year(std::size_t year) const;
  [[nodiscard]] std::uint64_t total_for_scenario(std::size_t scenario) const;

  friend bool operator==(const EventSample&, const EventSample&) = default;

 private:
  std::size_t n_years_;
  std::size_t n_scenarios_;
  std::vector<std::uint32_t> counts_;  // row-major: year x scenario
};

[[nodiscard]] EventSample sample_years(std::span<const FlareScenario> scenarios, std::size_t n_years,
                                       std::uint64_t seed);

}  // namespace aeroshield
