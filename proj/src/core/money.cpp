#include "aeroshield/money.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>

#include "aeroshield/errors.hpp"

namespace aeroshield {

namespace {

std::int64_t round_half_away(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("money amount is not finite");
  }
  return static_cast<std::int64_t>(std::llround(x));
}

std::string group_thousands(std::int64_t whole) {
  std::string digits = std::to_string(whole);
  std::string out;
  const auto n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace

Cents Cents::scaled(double factor) const {
  return Cents{round_half_away(static_cast<double>(value_) * factor)};
}

Cents Cents::from_usd(double usd) {
  // Half-up on the decimal value: nudge past binary representation error
  // (1.005 * 100 = 100.49999...) before rounding.
  const double cents = usd * 100.0;
  return Cents{round_half_away(cents + std::copysign(1e-9 * std::max(1.0, std::abs(cents)), cents))};
}

std::string Cents::usd_string() const {
  const bool negative = value_ < 0;
  const std::int64_t magnitude = negative ? -value_ : value_;
  std::string out = negative ? "-$" : "$";
  out += group_thousands(magnitude / 100);
  if (const auto frac = magnitude % 100; frac != 0) {
    out += '.';
    if (frac < 10) out += '0';
    out += std::to_string(frac);
  }
  return out;
}

}  // namespace aeroshield
