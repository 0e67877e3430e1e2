#pragma once

#include <cstdint>

#include "crlie/gauss.hpp"

namespace crlie {

/// Deterministic xorshift64* generator; identical streams across platforms
/// for a given seed, which keeps the randomized suites reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }

  /// Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 5, long max_den = 4) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }

  Rational nonzero_rational(long max_num = 5, long max_den = 4) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  GaussRational gauss(long max_num = 5, long max_den = 4) {
    return {rational(max_num, max_den), rational(max_num, max_den)};
  }

 private:
  uint64_t state_;
};

}  // namespace crlie
