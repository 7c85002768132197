#include "g2kit/rng.hpp"

namespace g2kit {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xorshift64Star::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::int64_t Xorshift64Star::integer(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational Xorshift64Star::small_rational(std::int64_t bound) {
  return Rational(integer(-bound, bound), integer(1, bound));
}

}  // namespace g2kit
