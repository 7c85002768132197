#pragma once

#include <cstdint>

#include "g2kit/numeric.hpp"

namespace g2kit {

/// xorshift64* (Vigna 2016): shifts (12, 25, 27), output multiplier
/// 0x2545F4914F6CDD1D. The state is seeded through one splitmix64 step
/// (increment 0x9E3779B97F4A7C15) so that seed 0 is usable.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed = 0);

  std::uint64_t next();

  /// Uniform double in [0, 1) built from the top 53 bits.
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi] (inclusive); slight modulo bias is acceptable here.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Small rational n/d with n in [-bound, bound], d in [1, bound].
  Rational small_rational(std::int64_t bound = 9);

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace g2kit
