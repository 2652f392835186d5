#pragma once

#include <cstdint>

namespace mvi {

/// Counter-based pseudo-random bits (splitmix64). Used wherever reproducible
/// draws must be a pure function of (seed, index): selection strategies,
/// feasible-point sampling. Independent of thread count and call order.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Decorrelated stream state for stream `index` under `seed`.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
  splitmix64(s);
  return s;
}

/// Map 64 random bits to [0, 1).
inline double u01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// One uniform draw in [0, 1) as a pure function of (seed, index).
inline double uniform_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = mix_seed(seed, index);
  return u01(splitmix64(s));
}

}  // namespace mvi
