#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hirota/cube.hpp"
#include "hirota/point.hpp"
#include "hirota/rng.hpp"

namespace hirota {

// Parameterization of the main component. Per node i (1-based pair indices
// 2i-1, 2i into kappa):
//   u_i = kappa_{2i-1} - kappa_{2i},
//   v_i = kappa_{2i-1}^2 - kappa_{2i}^2,
//   w_i = kappa_{2i-1}^3 - kappa_{2i}^3,
// and for each vertex c the coefficient
//   a_c = prod_{i<j in I} (kappa_i - kappa_j) * prod_{c_i = 1} lambda_i,
// where I picks kappa_{2i} for c_i = 0 and kappa_{2i-1} for c_i = 1,
// sorted ascending.
HirotaPoint phi(const MainParams& params);

// Left inverse of phi:
//   kappa_{2i-1} = (u_i^2 + v_i) / (2 u_i),  kappa_{2i} = (v_i - u_i^2) / (2 u_i),
//   lambda_i = (a_{e_i} / a_0) * (V(I_0) / V(I_{e_i})),
// followed by a full round trip through phi. u_i = 0 is an input error; a
// failed round trip (or degenerate recovered parameters) means the point is
// not in the image.
MainParams invert_point(const HirotaPoint& p);

// Torus action on theta coefficients: a_c -> a_c * prod_{c_i = 1} mu_i.
// All mu_i must be nonzero.
HirotaPoint shift(const HirotaPoint& p, std::span<const Rational> mu);

// Theta coefficients of the symmetric-matrix family:
//   a_c = prod_{i in S} s_i * prod_{i<j in S} q_ij, S = support(c), a_0 = 1.
std::vector<Rational> psi(const SymmetricParams& params);

// A 4-vs-4 multiset identity on theta coefficients: both sides have equal
// coordinate sums and equal Gram matrices sum_i c_i c_i^T. Sides are sorted,
// and left < right lexicographically.
struct ARelation {
  std::array<std::uint32_t, 4> left{};
  std::array<std::uint32_t, 4> right{};

  friend bool operator==(const ARelation&, const ARelation&) = default;
};

// All relations between distinct sorted 4-multisets of vertices, up to swap
// of sides, at most `budget` of them. Exhaustive enumeration, genus <= 5.
std::vector<ARelation> enumerate_a_relations(int genus, std::size_t budget);

// prod a_left - prod a_right; zero iff a satisfies the relation.
Rational check_a_relation(std::span<const Rational> a, const ARelation& r);

struct DirectionRatio {
  Rational multiplier;
  bool consistent = false;
};

// For two parallel faces of direction D (|D| >= 2) differing in the fixed
// set E, compares a_k a_l against a_{k~} a_{l~} where ~ flips the E
// coordinates, over all attained pairs of f1. On the main component all the
// ratios coincide; `multiplier` is the first pair's ratio.
DirectionRatio direction_ratio(std::span<const Rational> a,
                               const FaceDescriptor& f1,
                               const FaceDescriptor& f2);

// Seeded parameter draws used by the certificate and the CLI: numerators in
// [-50, 50], denominators in [1, 10], lambda nonzero, kappa pairwise
// distinct.
MainParams sample_main_params(int genus, SeededRng& rng);

}  // namespace hirota
