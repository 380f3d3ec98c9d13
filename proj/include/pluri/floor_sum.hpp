#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "error.hpp"

namespace pluri {

// One (a, m) term of a floor sum: contributes floor(n*a/m).
struct FloorTerm {
  std::int64_t a = 0;
  std::int64_t m = 1;
};

// Sum over terms of floor(n*a/m), for n >= 0 and 0 <= a < m.
inline std::int64_t floor_sum(std::int64_t n, std::span<const FloorTerm> terms) {
  if (n < 0) throw InvalidInput("floor_sum: n must be nonnegative");
  std::int64_t total = 0;
  for (const auto& [a, m] : terms) {
    if (m < 1 || a < 0 || a >= m)
      throw InvalidInput("floor_sum: need 0 <= a < m");
    total += static_cast<std::int64_t>((static_cast<__int128>(n) * a) / m);
  }
  return total;
}

}  // namespace pluri
