#pragma once

// Portable draws on top of std::mt19937_64. The standard distributions are
// implementation-defined, and scenario outputs must be byte-identical across
// toolchains for a fixed seed.

#include <cstddef>
#include <cstdint>
#include <random>

namespace debate {

using Rng = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
inline double unit_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const auto wide = static_cast<unsigned __int128>(rng()) * n;
  return static_cast<std::size_t>(wide >> 64);
}

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace debate
