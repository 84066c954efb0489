#pragma once

#include <cstdint>
#include <string_view>

namespace aeroshield {

// 64-bit FNV-1a. Stable across platforms and runs, unlike std::hash.
[[nodiscard]] constexpr std::uint64_t fnv1a_64(std::string_view text) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace aeroshield
