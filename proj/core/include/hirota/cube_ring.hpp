#pragma once

#include <cstdint>
#include <string>

#include "hirota/cube.hpp"
#include "hirota/polynomial.hpp"

namespace hirota {

// Polynomial ring Q[a_c, u_i, v_i, w_i] attached to the genus-g cube:
// 2^g + 3g variables, laid out as the a-block in vertex index order followed
// by u1..ug, v1..vg, w1..wg. Variable names are "a_<bits>" with the bits in
// coordinate order (coordinate 1 first), then "u1".."wg".
class CubeRing {
 public:
  explicit CubeRing(int genus);

  int genus() const { return genus_; }
  const RingPtr& ring() const { return ring_; }

  int a_var(std::uint32_t vertex_index) const;
  int u_var(int i) const;  // 0-based coordinate
  int v_var(int i) const;
  int w_var(int i) const;

  Polynomial a_polynomial(std::uint32_t vertex_index) const {
    return Polynomial::variable(ring_, a_var(vertex_index));
  }

  static std::string vertex_label(int genus, std::uint32_t index);

  friend bool operator==(const CubeRing& a, const CubeRing& b) {
    return a.genus_ == b.genus_;
  }

 private:
  int genus_;
  RingPtr ring_;
};

}  // namespace hirota
