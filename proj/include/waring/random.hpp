#pragma once

// Seeded sampling for genericity choices. Sampling is implemented on top of
// the raw 64-bit engine output so results do not depend on the standard
// library's distribution implementations.

#include <cstdint>
#include <random>

#include "waring/numerics.hpp"

namespace waring {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  // Uniform integer in [-h, h].
  long uniform(long h) {
    if (h <= 0) return 0;
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(h) + 1)) - h;
  }

  // Uniform nonzero integer in [-h, h].
  long nonzero(long h) {
    long x;
    do x = uniform(h);
    while (x == 0);
    return x;
  }

  // Independent stream for a sub-computation.
  Rng split() { return Rng(engine_()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace waring
