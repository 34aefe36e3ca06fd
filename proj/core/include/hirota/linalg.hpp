#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hirota/rational.hpp"
#include "hirota/rng.hpp"

namespace hirota {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Exact rank by fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing each row's denominators.
std::size_t rank_exact(const RationalMatrix& m);

// Rank of the reduction mod the given prime. Always <= the exact rank.
// Throws BadPrimeError when the prime divides an entry denominator; callers
// resample a fresh prime.
std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t prime);
std::optional<std::size_t> try_rank_mod_p(const RationalMatrix& m,
                                          std::uint64_t prime);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_probable_prime(std::uint64_t n);

// Random prime in [2^62, 2^63).
std::uint64_t random_prime(SeededRng& rng);

}  // namespace hirota
