#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hirota/errors.hpp"

namespace hirota {

inline constexpr int kMaxGenus = 16;

// Vertex of the g-dimensional cube {0,1}^g. Coordinates are the little-endian
// bits of `index`: coordinate i (0-based) is bit i, so index = sum c_i 2^i.
class Vertex {
 public:
  Vertex(int genus, std::uint32_t index);

  int genus() const { return genus_; }
  std::uint32_t index() const { return index_; }
  int coord(int i) const { return static_cast<int>((index_ >> i) & 1u); }
  std::vector<int> coords() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int genus_;
  std::uint32_t index_;
};

// Point of {0,1,2}^g. Sums of two distinct vertices are exactly the points
// with at least one coordinate equal to 1; those label the cube faces.
class DoublePoint {
 public:
  explicit DoublePoint(std::vector<int> coords);

  int genus() const { return static_cast<int>(coords_.size()); }
  int coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  // Number of coordinates equal to 1; the dimension of the labeled face.
  int ones() const;
  bool is_face_label() const { return ones() >= 1; }

  // Number of unordered vertex pairs summing to this point: 2^(ones-1).
  std::uint64_t attained_count() const;

  friend bool operator==(const DoublePoint&, const DoublePoint&) = default;
  friend auto operator<=>(const DoublePoint&, const DoublePoint&) = default;

 private:
  std::vector<int> coords_;
};

// A face of the cube: the free coordinate directions plus the fixed
// coordinates with their doubled values (0 for a fixed 0, 2 for a fixed 1).
struct FaceDescriptor {
  std::set<int> direction;
  std::map<int, int> fixed;

  int genus() const {
    return static_cast<int>(direction.size() + fixed.size());
  }
  DoublePoint double_point() const;

  friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
};

using VertexPair = std::pair<Vertex, Vertex>;  // first.index < second.index

// All 2^g vertices in index order. 1 <= genus <= 16.
std::vector<Vertex> vertices(int genus);

// All 3^g - 2^g face labels, in little-endian ternary counting order.
std::vector<DoublePoint> double_points(int genus);

// Unordered vertex pairs (c_k, c_l), c_k != c_l, with c_k + c_l = d, sorted by
// the smaller index. Throws InputError if d has no coordinate equal to 1.
std::vector<VertexPair> attained_pairs(const DoublePoint& d);

// Face labeled by d: direction = positions of 1, fixed = the rest.
FaceDescriptor face_of(const DoublePoint& d);

// Set of fixed coordinates where two faces of the same direction differ.
// Throws InputError if the directions disagree.
std::set<int> difference(const FaceDescriptor& f1, const FaceDescriptor& f2);

}  // namespace hirota
