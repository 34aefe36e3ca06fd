#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hirota/rational.hpp"

namespace hirota {

// xoshiro256** seeded through splitmix64. The algorithm is fixed (not the
// standard library engines) so that every seeded run is bit-identical across
// platforms and standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t next();

  // Uniform in [0, bound), bound >= 1, rejection sampled (no modulo bias).
  std::uint64_t below(std::uint64_t bound);

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::array<std::uint64_t, 4> state_;
};

// Numerator uniform in [-50, 50], denominator uniform in [1, 10].
Rational random_rational(SeededRng& rng);
Rational random_nonzero_rational(SeededRng& rng);

// `count` pairwise distinct rationals, rejection sampled.
std::vector<Rational> random_distinct_rationals(SeededRng& rng, int count);

}  // namespace hirota
