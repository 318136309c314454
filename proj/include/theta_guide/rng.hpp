#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace theta_guide {

// Portable draws on top of mt19937_64. The standard distributions are
// implementation-defined, which would make seeded runs differ across
// standard libraries.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // rejection sampling on the top of the range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace theta_guide
