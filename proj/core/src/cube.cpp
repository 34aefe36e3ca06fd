#include "hirota/cube.hpp"

#include <algorithm>
#include <bit>

namespace hirota {

namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus) {
    throw InputError("genus must be in [1, " + std::to_string(kMaxGenus) +
                     "], got " + std::to_string(genus));
  }
}

}  // namespace

Vertex::Vertex(int genus, std::uint32_t index) : genus_(genus), index_(index) {
  check_genus(genus);
  if (index >= (1u << genus)) {
    throw InputError("vertex index " + std::to_string(index) +
                     " out of range for genus " + std::to_string(genus));
  }
}

std::vector<int> Vertex::coords() const {
  std::vector<int> c(static_cast<std::size_t>(genus_));
  for (int i = 0; i < genus_; ++i) c[static_cast<std::size_t>(i)] = coord(i);
  return c;
}

DoublePoint::DoublePoint(std::vector<int> coords) : coords_(std::move(coords)) {
  check_genus(static_cast<int>(coords_.size()));
  for (int v : coords_) {
    if (v < 0 || v > 2) {
      throw InputError("double point coordinates must lie in {0,1,2}");
    }
  }
}

int DoublePoint::ones() const {
  return static_cast<int>(std::count(coords_.begin(), coords_.end(), 1));
}

std::uint64_t DoublePoint::attained_count() const {
  const int d = ones();
  if (d == 0) return 0;
  return std::uint64_t{1} << (d - 1);
}

DoublePoint FaceDescriptor::double_point() const {
  const int g = genus();
  std::vector<int> coords(static_cast<std::size_t>(g), -1);
  for (int i : direction) {
    if (i < 0 || i >= g) throw InputError("face direction index out of range");
    coords[static_cast<std::size_t>(i)] = 1;
  }
  for (auto [i, v] : fixed) {
    if (i < 0 || i >= g) throw InputError("face fixed index out of range");
    if (v != 0 && v != 2) throw InputError("face fixed values must be 0 or 2");
    if (coords[static_cast<std::size_t>(i)] != -1) {
      throw InputError("face direction and fixed sets overlap");
    }
    coords[static_cast<std::size_t>(i)] = v;
  }
  return DoublePoint(std::move(coords));
}

std::vector<Vertex> vertices(int genus) {
  check_genus(genus);
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << genus);
  for (std::uint32_t k = 0; k < (1u << genus); ++k) out.emplace_back(genus, k);
  return out;
}

std::vector<DoublePoint> double_points(int genus) {
  check_genus(genus);
  std::vector<DoublePoint> out;
  std::vector<int> c(static_cast<std::size_t>(genus), 0);
  while (true) {
    if (std::find(c.begin(), c.end(), 1) != c.end()) {
      out.emplace_back(c);
    }
    int i = 0;
    while (i < genus && c[static_cast<std::size_t>(i)] == 2) {
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == genus) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<VertexPair> attained_pairs(const DoublePoint& d) {
  if (!d.is_face_label()) {
    throw InputError("double point has no coordinate equal to 1");
  }
  const int g = d.genus();
  std::uint32_t base = 0;   // fixed coordinates: 2 contributes a 1-bit to both
  std::uint32_t free_mask = 0;
  for (int i = 0; i < g; ++i) {
    if (d.coord(i) == 2) base |= 1u << i;
    if (d.coord(i) == 1) free_mask |= 1u << i;
  }
  const int low_bit = std::countr_zero(free_mask);
  std::vector<VertexPair> out;
  out.reserve(d.attained_count());
  // Enumerate subsets of the free positions containing the lowest one, which
  // picks one representative per unordered pair.
  std::uint32_t rest = free_mask & ~(1u << low_bit);
  std::uint32_t sub = 0;
  while (true) {
    const std::uint32_t k = base | (1u << low_bit) | sub;
    const std::uint32_t l = base | (free_mask & ~((1u << low_bit) | sub));
    const std::uint32_t lo = std::min(k, l);
    const std::uint32_t hi = std::max(k, l);
    out.emplace_back(Vertex(g, lo), Vertex(g, hi));
    if (sub == rest) break;
    sub = (sub - rest) & rest;  // next subset of rest
  }
  std::sort(out.begin(), out.end());
  return out;
}

FaceDescriptor face_of(const DoublePoint& d) {
  if (!d.is_face_label()) {
    throw InputError("double point has no coordinate equal to 1");
  }
  FaceDescriptor f;
  for (int i = 0; i < d.genus(); ++i) {
    if (d.coord(i) == 1) {
      f.direction.insert(i);
    } else {
      f.fixed.emplace(i, d.coord(i));
    }
  }
  return f;
}

std::set<int> difference(const FaceDescriptor& f1, const FaceDescriptor& f2) {
  if (f1.direction != f2.direction || f1.genus() != f2.genus()) {
    throw InputError("faces have different directions");
  }
  std::set<int> out;
  for (auto [i, v] : f1.fixed) {
    if (f2.fixed.at(i) != v) out.insert(i);
  }
  return out;
}

}  // namespace hirota
