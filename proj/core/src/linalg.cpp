#include "hirota/linalg.hpp"

#include <gmpxx.h>

#include <array>

#include "hirota/errors.hpp"

namespace hirota {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  return data_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  return data_[i * cols_ + j];
}

std::size_t rank_exact(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm(1);
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).mpq().get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).mpq();
      mpz_class scaled = lcm / q.get_den();
      a[i][j] = q.get_num() * scaled;
    }
  }

  // Bareiss fraction-free elimination with column skipping.
  mpz_class prev(1);
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

// Entry reduced mod p, or nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce_mod(const Rational& r, std::uint64_t p) {
  const mpq_class& q = r.mpq();
  const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return mulmod(num, invmod(den, p), p);
}

}  // namespace

std::optional<std::size_t> try_rank_mod_p(const RationalMatrix& m,
                                          std::uint64_t prime) {
  if (prime < 2 || !is_probable_prime(prime)) {
    throw InputError("modulus must be prime");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(
      rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = reduce_mod(m.at(i, j), prime);
      if (!v) return std::nullopt;
      a[i][j] = *v;
    }
  }

  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) std::swap(a[pivot], a[row]);
    const std::uint64_t inv = invmod(a[row][col], prime);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t factor = mulmod(a[i][col], inv, prime);
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t sub = mulmod(factor, a[row][j], prime);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + prime - sub;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t prime) {
  const auto rank = try_rank_mod_p(m, prime);
  if (!rank) {
    throw BadPrimeError("prime divides a matrix denominator");
  }
  return *rank;
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses decide primality for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(SeededRng& rng) {
  while (true) {
    std::uint64_t candidate =
        (std::uint64_t{1} << 62) + rng.below(std::uint64_t{1} << 62);
    candidate |= 1;
    if (is_probable_prime(candidate)) return candidate;
  }
}

}  // namespace hirota
