#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace patterndp {

// Deterministic uniform source. mt19937_64 output is pinned by the standard,
// and the transforms below avoid std::*_distribution (whose streams are
// implementation-defined), so equal seeds give identical sample sequences on
// every platform. Single-owner mutable state: one instance per trial, never
// shared across tasks.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); the 2^-53-probability exact zero is redrawn so
  // log-based transforms stay finite.
  double next_unit_open() {
    double u = next_unit();
    while (u == 0.0) u = next_unit();
    return u;
  }

  // Unbiased integer in [0, n). n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % n;
    }
  }

  // Standard normal via Box-Muller; two uniforms per draw, sine twin unused.
  double next_normal() {
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace patterndp
