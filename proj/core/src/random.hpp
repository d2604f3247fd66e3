#pragma once

#include <cstdint>
#include <random>

namespace tia::detail {

// Draws that do not depend on the standard library's distribution algorithms,
// so seeded output is the same on every platform.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % n;
}

inline double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

}  // namespace tia::detail
