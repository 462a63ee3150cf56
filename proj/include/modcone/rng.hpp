#pragma once

#include <cstdint>

#include "modcone/rational.hpp"

namespace modcone {

// Deterministic splitmix64 stream. The sequence depends only on the seed, not
// on the platform or standard library, which keeps every seeded test and the
// CLI verify output reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant for the tiny ranges used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Sampling convention for property tests: numerator in [-20, 20],
  // denominator in [1, 10].
  Rational rational() { return Rational(range(-20, 20), range(1, 10)); }

  Rational nonzero_rational() {
    while (true) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  // Independent stream derived from this seed; does not advance this stream.
  Rng fork(std::uint64_t stream) const {
    Rng r(state_ ^ (0xd1342543de82ef95ULL * (stream + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace modcone
