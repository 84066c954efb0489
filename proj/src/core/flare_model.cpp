#include "aeroshield/flare_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "aeroshield/errors.hpp"
#include "aeroshield/hash.hpp"

namespace aeroshield {

namespace {

constexpr const char* kPointsField = "frequency_points";

double clamp_probability(double p) {
  return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

}  // namespace

void validate(const FlareScenario& s, const std::string& field) {
  const std::string where = field + "[" + s.id + "]";
  if (s.id.empty()) throw ConfigError("scenario id must not be empty", field);
  if (!(std::isfinite(s.recurrence_years) && s.recurrence_years > 0.0)) {
    throw ConfigError("recurrence_years must be > 0", where + ".recurrence_years");
  }
  if (!(s.sunspot_area_fraction >= 0.0 && s.sunspot_area_fraction <= 1.0)) {
    throw ConfigError("sunspot_area_fraction must be in [0, 1]", where + ".sunspot_area_fraction");
  }
  if (s.energy_erg && !(std::isfinite(*s.energy_erg) && *s.energy_erg >= 0.0)) {
    throw ConfigError("energy_erg must be >= 0", where + ".energy_erg");
  }
  if (s.reference_dose_sv && !(std::isfinite(*s.reference_dose_sv) && *s.reference_dose_sv >= 0.0)) {
    throw ConfigError("reference_dose_sv must be >= 0", where + ".reference_dose_sv");
  }
  if (s.x_magnitude && !(std::isfinite(*s.x_magnitude) && *s.x_magnitude > 0.0)) {
    throw ConfigError("x_magnitude must be > 0", where + ".x_magnitude");
  }
}

std::vector<FlareScenario> builtin_scenarios() {
  constexpr double kNormalSun = 0.0005;
  constexpr double kActiveSun = 0.003;
  // Recurrences of the catalog-calibrated events are reciprocals of the
  // catalog probabilities (0.006 and 0.0007 per year).
  constexpr double kCarringtonRecurrence = 1.0 / 0.006;
  constexpr double kMiyakeRecurrence = 1.0 / 0.0007;
  return {
      {"tenth-year-normal", "Flare every 1/10 year, normal sun", 0.1, kNormalSun, {}, {}, {}},
      {"tenth-year-active", "Flare every 1/10 year, active sun", 0.1, kActiveSun, {}, {}, {}},
      {"annual-normal", "Annual maximum flare, normal sun", 1.0, kNormalSun, {}, {}, {}},
      {"annual-active", "Annual maximum flare, active sun", 1.0, kActiveSun, {}, {}, {}},
      {"decadal-normal", "Decadal maximum flare, normal sun", 10.0, kNormalSun, {}, {}, {}},
      {"decadal-active", "Decadal maximum flare, active sun", 10.0, kActiveSun, {}, 1.2e-3, {}},
      // No recurrence is published for the two theoretical maxima; they are
      // priced at the Carrington and Miyake catalog rates respectively.
      {"spot-max-active", "Spot maximum flare, active sun", kCarringtonRecurrence, kActiveSun, 3.64e33, {}, {}},
      {"pmf", "Possible maximum flare (20% spot coverage)", kMiyakeRecurrence, 0.2, 1.98e36, 0.5, {}},
      {"carrington", "Carrington-class event (X45)", kCarringtonRecurrence, kActiveSun, {}, {}, 45.0},
      {"miyake", "Miyake-class event (X1001)", kMiyakeRecurrence, kActiveSun, {}, {}, 1001.0},
  };
}

const FlareScenario& find_scenario(std::span<const FlareScenario> scenarios, std::string_view id) {
  const auto it = std::find_if(scenarios.begin(), scenarios.end(),
                               [&](const FlareScenario& s) { return s.id == id; });
  if (it == scenarios.end()) {
    throw NotFoundError("unknown scenario '" + std::string(id) + "'");
  }
  return *it;
}

// --- FrequencyCatalog -------------------------------------------------------

FrequencyCatalog::FrequencyCatalog(std::vector<FrequencyPoint> points, FrequencyInterpolation mode)
    : points_(std::move(points)), mode_(mode) {
  if (points_.size() < 2) throw ConfigError("at least two points are required", kPointsField);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!(std::isfinite(p.x_magnitude) && p.x_magnitude > 0.0)) {
      throw ConfigError("magnitudes must be > 0", kPointsField);
    }
    if (!(p.annual_probability > 0.0 && p.annual_probability <= 1.0)) {
      throw ConfigError("probabilities must lie in (0, 1]", kPointsField);
    }
    if (i > 0 && !(p.x_magnitude > points_[i - 1].x_magnitude)) {
      throw ConfigError("magnitudes must be strictly increasing", kPointsField);
    }
    if (i > 0 && !(p.annual_probability < points_[i - 1].annual_probability)) {
      throw ConfigError("probabilities must be strictly decreasing", kPointsField);
    }
  }

  // Ordinary least squares of log10 P on log10 x.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& p : points_) {
    const double lx = std::log10(p.x_magnitude);
    const double ly = std::log10(p.annual_probability);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(points_.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit_ = {(sy - slope * sx) / n, slope};
}

FrequencyCatalog FrequencyCatalog::standard() {
  return FrequencyCatalog({{13.0, 0.4}, {45.0, 0.006}, {1001.0, 0.0007}});
}

FrequencyCatalog::LogLine FrequencyCatalog::segment_for_magnitude(double log_x) const {
  if (mode_ == FrequencyInterpolation::least_squares_powerlaw) return fit_;
  std::size_t i = 1;
  while (i + 1 < points_.size() && log_x > std::log10(points_[i].x_magnitude)) ++i;
  const double x0 = std::log10(points_[i - 1].x_magnitude);
  const double x1 = std::log10(points_[i].x_magnitude);
  const double y0 = std::log10(points_[i - 1].annual_probability);
  const double y1 = std::log10(points_[i].annual_probability);
  const double slope = (y1 - y0) / (x1 - x0);
  return {y0 - slope * x0, slope};
}

FrequencyCatalog::LogLine FrequencyCatalog::segment_for_probability(double log_p) const {
  if (mode_ == FrequencyInterpolation::least_squares_powerlaw) return fit_;
  std::size_t i = 1;
  while (i + 1 < points_.size() && log_p < std::log10(points_[i].annual_probability)) ++i;
  return segment_for_magnitude(std::log10(points_[i].x_magnitude));
}

double FrequencyCatalog::annual_exceedance_probability(double x_magnitude) const {
  if (!(std::isfinite(x_magnitude) && x_magnitude > 0.0)) {
    throw DomainError("X-class magnitude must be > 0");
  }
  if (mode_ == FrequencyInterpolation::piecewise_loglog) {
    for (const auto& p : points_) {
      if (p.x_magnitude == x_magnitude) return p.annual_probability;
    }
  }
  const double log_x = std::log10(x_magnitude);
  return clamp_probability(std::pow(10.0, segment_for_magnitude(log_x).at(log_x)));
}

double FrequencyCatalog::return_period_years(double x_magnitude) const {
  return 1.0 / annual_exceedance_probability(x_magnitude);
}

double FrequencyCatalog::magnitude_at_probability(double probability) const {
  if (!(probability > 0.0 && probability <= 1.0)) {
    throw DomainError("probability must lie in (0, 1]");
  }
  if (mode_ == FrequencyInterpolation::piecewise_loglog) {
    for (const auto& p : points_) {
      if (p.annual_probability == probability) return p.x_magnitude;
    }
  }
  const double log_p = std::log10(probability);
  const LogLine line = segment_for_probability(log_p);
  return std::pow(10.0, (log_p - line.intercept) / line.slope);
}

// --- GLE records ------------------------------------------------------------

std::vector<GleRecord> calibration_records() {
  return {
      {"Miyake-775", 775, 1001.0},
      {"Carrington", 1859, 45.0},
      {"GLE43", 1989, 13.0},
      {"GLE69", 2005, 7.1},
  };
}

std::size_t count_at_least(std::span<const GleRecord> records, double x_magnitude) {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const GleRecord& r) { return r.x_magnitude >= x_magnitude; }));
}

// --- Event sampling ---------------------------------------------------------

EventSample::EventSample(std::size_t n_years, std::size_t n_scenarios)
    : n_years_(n_years), n_scenarios_(n_scenarios), counts_(n_years * n_scenarios, 0U) {}

std::uint32_t EventSample::count(std::size_t year, std::size_t scenario) const {
  return counts_.at(year * n_scenarios_ + scenario);
}

void EventSample::set_count(std::size_t year, std::size_t scenario, std::uint32_t value) {
  counts_.at(year * n_scenarios_ + scenario) = value;
}

std::vector<std::size_t> EventSample::events_in_year(std::size_t year) const {
  std::vector<std::size_t> events;
  for (std::size_t s = 0; s < n_scenarios_; ++s) {
    events.insert(events.end(), count(year, s), s);
  }
  return events;
}

std::uint64_t EventSample::total_for_scenario(std::size_t scenario) const {
  std::uint64_t total = 0;
  for (std::size_t y = 0; y < n_years_; ++y) total += count(y, scenario);
  return total;
}

EventSample sample_years(std::span<const FlareScenario> scenarios, std::size_t n_years, std::uint64_t seed) {
  if (n_years < 1) throw DomainError("n_years must be >= 1");
  EventSample sample(n_years, scenarios.size());
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const auto& scenario = scenarios[s];
    if (!(scenario.recurrence_years > 0.0)) {
      throw DomainError("scenario '" + scenario.id + "' has non-positive recurrence");
    }
    const double rate = scenario.annual_rate();
    if (rate <= 0.0) continue;

    const std::uint64_t key = fnv1a_64(scenario.id);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
    std::mt19937_64 engine(seq);
    std::poisson_distribution<std::uint32_t> events(rate);
    for (std::size_t y = 0; y < n_years; ++y) sample.set_count(y, s, events(engine));
  }
  return sample;
}

}  // namespace aeroshield
