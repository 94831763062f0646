#pragma once

#include <cstdint>
#include <random>

#include "isogr/rational.hpp"

namespace isogr {

// Deterministic source of small random rationals for randomized checks.
// std::mt19937_64 has a fully specified bit stream, and raw draws are mapped
// by modulo, so a given seed produces the same values on every platform
// (std::uniform_int_distribution would not guarantee that).
class SmallRatRng {
 public:
  explicit SmallRatRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Numerator drawn from {-3,...,3}, denominator from {1,2,3}.
  Rat rat() {
    const long num = static_cast<long>(raw() % 7) - 3;
    const long den = static_cast<long>(raw() % 3) + 1;
    Rat r(num);
    r /= den;
    return r;
  }

  Rat nonzero_rat() {
    for (;;) {
      Rat r = rat();
      if (r != 0) return r;
    }
  }

  // Uniform-ish index in [0, mod); mod must be positive.
  std::size_t index(std::size_t mod) { return static_cast<std::size_t>(raw() % mod); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace isogr
