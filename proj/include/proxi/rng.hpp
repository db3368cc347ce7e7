#pragma once

#include <cmath>
#include <cstdint>

namespace proxi {

// SplitMix64 (Steele/Lea/Vigna). Part of the reproducibility contract: every
// random draw in the project comes from this generator, so identical seeds
// give bit-identical output on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform on [0,1) with 53 bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Box-Muller, cosine branch; two uniforms per variate.
  double normal() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::uint64_t state_;
};

// Stateless avalanche (the SplitMix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-item substream: seed XOR hash(index). The offset keeps index 0 away
// from the finalizer's fixed point at zero. Also part of the contract; the
// simulator uses substream(seed, record_index) so parallel generation equals
// serial generation.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ mix64(index + 0x61C8864680B583EBULL));
}

}  // namespace proxi
