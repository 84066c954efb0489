#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the engine's interpolation or inversion code.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

// Straight-line interpolation through the default altitude/depth anchors.
inline double depth_at_altitude(double altitude_km) {
  const std::vector<std::pair<double, double>> pts{{0.0, 1037.0}, {7.0, 484.0}, {9.5, 365.0}, {12.0, 234.0}};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (altitude_km <= pts[i].first) {
      const auto [a0, d0] = pts[i - 1];
      const auto [a1, d1] = pts[i];
      return d0 + (d1 - d0) * (altitude_km - a0) / (a1 - a0);
    }
  }
  return pts.back().second;
}

// Decadal-active dose written as explicit exponentials per segment.
inline double decadal_active_dose(double depth) {
  const double k1 = std::log(1.2e-3 / 4.5e-4) / (365.0 - 234.0);
  const double k2 = std::log(4.5e-4 / 1.2e-4) / (484.0 - 365.0);
  if (depth <= 365.0) return 1.2e-3 * std::exp(-k1 * (depth - 234.0));
  return 4.5e-4 * std::exp(-k2 * (depth - 365.0));
}

// log10 P linear in log10 x between the two bracketing catalog points.
inline double loglog_exceedance(double x) {
  const double lx = std::log10(x);
  double x0 = 13.0, p0 = 0.4, x1 = 45.0, p1 = 0.006;
  if (x > 45.0) {
    x0 = 45.0, p0 = 0.006, x1 = 1001.0, p1 = 0.0007;
  }
  const double t = (lx - std::log10(x0)) / (std::log10(x1) - std::log10(x0));
  return std::pow(10.0, std::log10(p0) + t * (std::log10(p1) - std::log10(p0)));
}

// First grid point in [lo, hi] (ascending, step `step`) where f(x) <= target.
inline double first_at_or_below(const std::function<double(double)>& f, double target, double lo, double hi,
                                double step) {
  const auto n = static_cast<long>(std::ceil((hi - lo) / step));
  for (long i = 0; i <= n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    if (f(x) <= target) return x;
  }
  return NAN;
}

// Highest grid altitude in [lo, hi] (scanned downward) where dose(alt) <= target.
inline double highest_at_or_below(const std::function<double(double)>& dose, double target, double lo, double hi,
                                  double step) {
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) {
    const double a = hi - static_cast<double>(i) * step;
    if (dose(a) <= target) return a;
  }
  return NAN;
}

}  // namespace oracle
