#pragma once

// Seeded randomness with a fully specified output sequence: mt19937_64 for
// raw words and rejection sampling for bounded draws, so identical seeds
// reproduce identical runs on any standard library.

#include <cstdint>
#include <random>

namespace spair {

/// splitmix64 mix of (seed, index); used to give each trial its own stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return r % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spair
