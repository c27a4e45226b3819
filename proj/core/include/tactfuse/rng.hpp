#pragma once

#include <cmath>
#include <cstdint>

namespace tactfuse {

// Deterministic 64-bit linear congruential generator (Knuth's MMIX constants
// a = 6364136223846793005, c = 1442695040888963407) with splitmix64-mixed
// seeding. Identical (seed, stream) pairs produce identical value streams on
// every platform, which the simulator's byte-exact reproducibility contract
// depends on.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(mix64(seed)) {}

  // Independent substream; the simulator uses stream == frame index for
  // per-frame sensor noise and stream == frame count for the shared texture.
  static Lcg64 substream(std::uint64_t seed, std::uint64_t stream) {
    Lcg64 g(0);
    g.state_ = mix64(mix64(seed) + 0x9E3779B97F4A7C15ull * (stream + 1));
    return g;
  }

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }

  // Uniform in [0, 1) from the top 53 bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; generates a pair and caches the second.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = next_uniform();
    const double u2 = next_uniform();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;  // keep log() finite
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  // splitmix64 finalizer (Steele, Lea, Flood 2014).
  static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tactfuse
