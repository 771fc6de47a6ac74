#pragma once

// Deterministic random generators for property-style tests.  All draws go
// through SplitMix-style integer mixing so results do not depend on

// standard-library distribution implementations.

#include "wronsky/scalars.hpp"

#include <cstdint>
#include <vector>

namespace testutil {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }

  double unit() { return double(next() >> 11) * 0x1p-53; }

  wronsky::Rational rational(long max_num = 20, long max_den = 8) {
    long num = range(-max_num, max_num);
    long den = range(1, max_den);
    return wronsky::Rational(num, den);
  }

  wronsky::GaussRat gauss(long max_num = 20, long max_den = 8) {
    return {rational(max_num, max_den), rational(max_num, max_den)};
  }

  template <unsigned B>
  wronsky::Complex<B> complex(double scale = 2.0) {
    using R = wronsky::Real<B>;
    return wronsky::Complex<B>(R(scale * (2 * unit() - 1)),
                               R(scale * (2 * unit() - 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace testutil
