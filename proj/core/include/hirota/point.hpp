#pragma once

#include <vector>

#include "hirota/rational.hpp"

namespace hirota {

// A candidate point of the Hirota variety: theta coefficients a indexed by
// vertex (little-endian bit order) plus the weighted direction coordinates.
// Weights under the torus action: u has weight 1, v weight 2, w weight 3.
struct HirotaPoint {
  int genus = 0;
  std::vector<Rational> a;
  std::vector<Rational> u;
  std::vector<Rational> v;
  std::vector<Rational> w;

  // Shape check: |a| = 2^genus, |u| = |v| = |w| = genus.
  void validate() const;
};

// Degenerate-curve parameters: one lambda per node, kappa in pairs
// (kappa_{2i-1}, kappa_{2i}) attached to node i. All lambda nonzero, all
// kappa pairwise distinct.
struct MainParams {
  std::vector<Rational> lambda;
  std::vector<Rational> kappa;

  int genus() const { return static_cast<int>(lambda.size()); }
  void validate() const;
};

// Parameters of the symmetric-matrix family: a_c = prod_{i in S} s_i *
// prod_{i<j in S} q_ij where S is the support of c. q is stored as the upper
// triangle, row by row: (0,1), (0,2), ..., (0,g-1), (1,2), ...
struct SymmetricParams {
  std::vector<Rational> s;
  std::vector<Rational> q;

  int genus() const { return static_cast<int>(s.size()); }
  const Rational& q_at(int i, int j) const;
  void validate() const;
};

// Values in cube ring layout: a-block by vertex index, then u, v, w blocks.
std::vector<Rational> point_assignment(const HirotaPoint& p);

}  // namespace hirota
