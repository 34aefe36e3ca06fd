#include "hirota/soliton.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hirota/errors.hpp"
#include "hirota/linalg.hpp"
#include "hirota/main_component.hpp"

namespace hirota {

namespace {

constexpr int kMaxColumns = 20;

// Determinant by fraction elimination; k is small here.
Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      result = -result;
    }
    result *= a[col][col];
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      const Rational factor = a[i][col] * inv;
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] -= factor * a[col][j];
      }
    }
  }
  return result;
}

std::vector<Rational> kappa_power_sums(const SolitonData& data,
                                       const std::vector<int>& subset) {
  std::vector<Rational> sums(3, Rational(0));
  for (int col : subset) {
    const Rational& k = data.kappa[static_cast<std::size_t>(col)];
    sums[0] += k;
    sums[1] += k * k;
    sums[2] += k * k * k;
  }
  return sums;
}

}  // namespace

Rational& SolitonMatrix::at(int i, int j) {
  if (i < 0 || i >= k || j < 0 || j >= n) {
    throw InputError("matrix index out of range");
  }
  return entries[static_cast<std::size_t>(i * n + j)];
}

const Rational& SolitonMatrix::at(int i, int j) const {
  if (i < 0 || i >= k || j < 0 || j >= n) {
    throw InputError("matrix index out of range");
  }
  return entries[static_cast<std::size_t>(i * n + j)];
}

void SolitonMatrix::validate() const {
  if (k < 1 || n < 2 || k >= n || n > kMaxColumns) {
    throw InputError("soliton matrix needs 1 <= k < n <= " +
                     std::to_string(kMaxColumns));
  }
  if (entries.size() != static_cast<std::size_t>(k * n)) {
    throw InputError("soliton matrix entry count mismatch");
  }
}

PlueckerList pluecker_minors(const SolitonMatrix& m) {
  m.validate();
  RationalMatrix rm(static_cast<std::size_t>(m.k),
                    static_cast<std::size_t>(m.n));
  for (int i = 0; i < m.k; ++i) {
    for (int j = 0; j < m.n; ++j) {
      rm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          m.at(i, j);
    }
  }
  if (rank_exact(rm) != static_cast<std::size_t>(m.k)) {
    throw InputError("soliton matrix must have full row rank");
  }

  PlueckerList out;
  // Subset bitmasks in increasing numeric order = colexicographic order on
  // the ascending column lists.
  for (std::uint32_t mask = 0; mask < (1u << m.n); ++mask) {
    if (std::popcount(mask) != m.k) continue;
    std::vector<int> subset;
    subset.reserve(static_cast<std::size_t>(m.k));
    for (int j = 0; j < m.n; ++j) {
      if ((mask >> j) & 1u) subset.push_back(j);
    }
    std::vector<std::vector<Rational>> square(
        static_cast<std::size_t>(m.k),
        std::vector<Rational>(static_cast<std::size_t>(m.k)));
    for (int i = 0; i < m.k; ++i) {
      for (int j = 0; j < m.k; ++j) {
        square[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            m.at(i, subset[static_cast<std::size_t>(j)]);
      }
    }
    out.emplace_back(std::move(subset), det(std::move(square)));
  }
  return out;
}

void SolitonData::validate() const {
  if (k < 1 || n < 2 || k >= n || n > kMaxColumns) {
    throw InputError("soliton data needs 1 <= k < n <= " +
                     std::to_string(kMaxColumns));
  }
  if (kappa.size() != static_cast<std::size_t>(n)) {
    throw InputError("soliton data needs n kappa values");
  }
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    for (std::size_t j = i + 1; j < kappa.size(); ++j) {
      if (kappa[i] == kappa[j]) {
        throw InputError("kappa values must be pairwise distinct");
      }
    }
  }
  bool any = false;
  for (const auto& [subset, value] : pluecker) {
    if (static_cast<int>(subset.size()) != k) {
      throw InputError("pluecker subset size mismatch");
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 0 || subset[i] >= n) {
        throw InputError("pluecker column index out of range");
      }
      if (i + 1 < subset.size() && subset[i] >= subset[i + 1]) {
        throw InputError("pluecker subsets must be ascending");
      }
    }
    if (!value.is_zero()) any = true;
  }
  if (!any) throw InputError("all pluecker coordinates vanish");
}

NumericExpSum soliton_tau(const SolitonData& data) {
  data.validate();
  NumericExpSum tau;
  for (const auto& [subset, p_i] : data.pluecker) {
    if (p_i.is_zero()) continue;
    Rational coeff = p_i;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        coeff *= data.kappa[static_cast<std::size_t>(subset[i])] -
                 data.kappa[static_cast<std::size_t>(subset[j])];
      }
    }
    const std::vector<Rational> sums = kappa_power_sums(data, subset);
    tau.add_term(FreqTriple{sums[0], sums[1], sums[2]}, coeff);
  }
  return tau;
}

SolitonMatrix lambda_matrix(std::span<const Rational> lambda) {
  const int g = static_cast<int>(lambda.size());
  if (g < 1 || g > kMaxColumns / 2) {
    throw InputError("lambda length out of range");
  }
  SolitonMatrix m;
  m.k = g;
  m.n = 2 * g;
  m.entries.assign(static_cast<std::size_t>(m.k * m.n), Rational(0));
  for (int i = 0; i < g; ++i) {
    m.at(i, 2 * i) = lambda[static_cast<std::size_t>(i)];
    m.at(i, 2 * i + 1) = Rational(1);
  }
  return m;
}

NumericExpSum theta_tau(const HirotaPoint& p) {
  p.validate();
  const int g = p.genus;
  NumericExpSum tau;
  for (std::uint32_t c = 0; c < (1u << g); ++c) {
    FreqTriple key{Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < g; ++i) {
      if (!((c >> i) & 1u)) continue;
      const auto idx = static_cast<std::size_t>(i);
      key.x += p.u[idx];
      key.y += p.v[idx];
      key.t += p.w[idx];
    }
    tau.add_term(key, p.a[c]);
  }
  return tau;
}

bool theta_soliton_equivalence(const MainParams& params) {
  params.validate();
  const HirotaPoint p = phi(params);
  const int g = params.genus();
  const NumericExpSum lhs = theta_tau(p);

  SolitonData data;
  data.k = g;
  data.n = 2 * g;
  data.kappa = params.kappa;
  data.pluecker = pluecker_minors(lambda_matrix(params.lambda));
  NumericExpSum rhs = soliton_tau(data);

  // Divide by the exponential of the even-position kappa powers (the I_0
  // block): keys shift by minus their power sums.
  FreqTriple base{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < g; ++i) {
    const Rational& k2 = params.kappa[static_cast<std::size_t>(2 * i + 1)];
    base.x -= k2;
    base.y -= k2 * k2;
    base.t -= k2 * k2 * k2;
  }
  rhs = shifted_keys(rhs, base);
  return lhs == rhs;
}

SolitonMatrix random_positive_matrix(int k, int n, SeededRng& rng) {
  if (k < 1 || n < 2 || k >= n || n > kMaxColumns) {
    throw InputError("matrix shape out of range");
  }
  // Power-basis rows x_j^i at distinct positive nodes: all maximal minors
  // are (generalized) Vandermonde determinants, hence positive.
  std::vector<Rational> nodes;
  while (static_cast<int>(nodes.size()) < n) {
    Rational x(static_cast<long>(rng.int_in(1, 40)),
               static_cast<long>(rng.int_in(1, 8)));
    if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) {
      nodes.push_back(std::move(x));
    }
  }
  std::sort(nodes.begin(), nodes.end());
  SolitonMatrix m;
  m.k = k;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(k * n), Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational power(1);
    for (int i = 0; i < k; ++i) {
      m.at(i, j) = power;
      power *= nodes[static_cast<std::size_t>(j)];
    }
  }
  return m;
}

SolitonMatrix random_full_rank_matrix(int k, int n, SeededRng& rng) {
  if (k < 1 || n < 2 || k >= n || n > kMaxColumns) {
    throw InputError("matrix shape out of range");
  }
  while (true) {
    SolitonMatrix m;
    m.k = k;
    m.n = n;
    m.entries.reserve(static_cast<std::size_t>(k * n));
    for (int i = 0; i < k * n; ++i) {
      m.entries.push_back(random_rational(rng));
    }
    RationalMatrix rm(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) {
        rm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            m.at(i, j);
      }
    }
    if (rank_exact(rm) == static_cast<std::size_t>(k)) return m;
  }
}

}  // namespace hirota
