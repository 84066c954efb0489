#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace aeroshield {

// Integer amount of US cents. All money arithmetic in the engine stays in
// this type; floating-point factors are applied through `scaled`, which
// rounds half away from zero to the nearest cent.
class Cents {
 public:
  constexpr Cents() = default;
  constexpr explicit Cents(std::int64_t value) : value_(value) {}

  [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }

  [[nodiscard]] Cents scaled(double factor) const;

  constexpr Cents& operator+=(Cents other) noexcept {
    value_ += other.value_;
    return *this;
  }
  constexpr Cents& operator-=(Cents other) noexcept {
    value_ -= other.value_;
    return *this;
  }
  friend constexpr Cents operator+(Cents a, Cents b) noexcept { return Cents{a.value_ + b.value_}; }
  friend constexpr Cents operator-(Cents a, Cents b) noexcept { return Cents{a.value_ - b.value_}; }
  friend constexpr Cents operator*(Cents a, std::int64_t k) noexcept { return Cents{a.value_ * k}; }
  friend constexpr auto operator<=>(Cents, Cents) = default;

  // Rounds half away from zero. Throws DomainError for non-finite input.
  [[nodiscard]] static Cents from_usd(double usd);

  // "$4,680" for whole dollars, "$11,820.60" otherwise.
  [[nodiscard]] std::string usd_string() const;

 private:
  std::int64_t value_ = 0;
};

}  // namespace aeroshield
