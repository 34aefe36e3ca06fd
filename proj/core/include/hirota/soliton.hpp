#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hirota/expsum.hpp"
#include "hirota/point.hpp"
#include "hirota/rational.hpp"
#include "hirota/rng.hpp"

namespace hirota {

// k x n generator matrix of a line soliton, row-major, full row rank.
struct SolitonMatrix {
  int k = 0;
  int n = 0;
  std::vector<Rational> entries;

  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;
  void validate() const;
};

// Maximal minors indexed by ascending column subsets (0-based), listed in
// colexicographic order. Determinants take the columns in ascending order.
using PlueckerList = std::vector<std::pair<std::vector<int>, Rational>>;

// All C(n, k) maximal minors. Throws InputError when the matrix is not of
// full row rank.
PlueckerList pluecker_minors(const SolitonMatrix& m);

struct SolitonData {
  int k = 0;
  int n = 0;
  std::vector<Rational> kappa;  // n pairwise distinct phase constants
  PlueckerList pluecker;

  void validate() const;
};

// tau = sum over k-subsets I of p_I prod_{i<j in I} (kappa_i - kappa_j)
//       * exp(sum_I kappa x + sum_I kappa^2 y + sum_I kappa^3 t),
// with equal frequency triples merged.
NumericExpSum soliton_tau(const SolitonData& data);

// The g x 2g block-bidiagonal matrix with rows (lambda_i at column 2i-1,
// 1 at column 2i), matching the degenerate theta coefficients.
SolitonMatrix lambda_matrix(std::span<const Rational> lambda);

// theta_C at a point: sum over vertices c of a_c exp((c.u) x + (c.v) y +
// (c.w) t), with equal frequency triples merged.
NumericExpSum theta_tau(const HirotaPoint& p);

// theta_C under phi(params), read as a numeric exponential sum with keys
// (c.u, c.v, c.w), equals the (g, 2g) soliton tau of the lambda matrix after
// dividing by the exponential carried by the even-index kappa powers.
bool theta_soliton_equivalence(const MainParams& params);

// Totally positive generator matrix (power-basis rows at increasing positive
// nodes): every maximal minor is positive, so the soliton is regular.
SolitonMatrix random_positive_matrix(int k, int n, SeededRng& rng);

// Full-row-rank matrix with unconstrained random entries.
SolitonMatrix random_full_rank_matrix(int k, int n, SeededRng& rng);

}  // namespace hirota
