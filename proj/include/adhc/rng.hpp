#pragma once

#include <cstdint>

namespace adhc {

// SplitMix64 (Steele/Lea/Flood). Chosen as the project-wide generator because
// it is trivial to reimplement bit-for-bit in any language, which makes every
// seeded corpus reproducible outside this codebase. Reports record the
// algorithm id "splitmix64".
struct SplitMix64 {
  std::uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Plain modulo: the bias is < bound/2^64 and the
  // draw sequence stays identical across platforms.
  std::uint64_t next_below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Uniform in [0,1) with 53 random mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Derives an independent stream for instance `stream` of a batch run.
  // child_state = splitmix64(master XOR (GOLDEN * (stream+1))).next()
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 g(master ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
    return g.next();
  }
};

inline constexpr const char* kRngAlgorithm = "splitmix64";

}  // namespace adhc
