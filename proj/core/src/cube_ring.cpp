#include "hirota/cube_ring.hpp"

namespace hirota {

namespace {

constexpr int kMaxRingGenus = 12;  // 2^12 + 36 variables is already generous

}  // namespace

CubeRing::CubeRing(int genus) : genus_(genus) {
  if (genus < 1 || genus > kMaxRingGenus) {
    throw InputError("cube ring genus must be in [1, " +
                     std::to_string(kMaxRingGenus) + "]");
  }
  std::vector<std::string> names;
  names.reserve((std::size_t{1} << genus) + 3 * static_cast<std::size_t>(genus));
  for (std::uint32_t k = 0; k < (1u << genus); ++k) {
    names.push_back("a_" + vertex_label(genus, k));
  }
  for (const char* prefix : {"u", "v", "w"}) {
    for (int i = 1; i <= genus; ++i) {
      names.push_back(prefix + std::to_string(i));
    }
  }
  ring_ = make_ring(std::move(names));
}

int CubeRing::a_var(std::uint32_t vertex_index) const {
  if (vertex_index >= (1u << genus_)) {
    throw InputError("vertex index out of range");
  }
  return static_cast<int>(vertex_index);
}

int CubeRing::u_var(int i) const {
  if (i < 0 || i >= genus_) throw InputError("coordinate index out of range");
  return static_cast<int>(1u << genus_) + i;
}

int CubeRing::v_var(int i) const { return u_var(i) + genus_; }

int CubeRing::w_var(int i) const { return u_var(i) + 2 * genus_; }

std::string CubeRing::vertex_label(int genus, std::uint32_t index) {
  std::string bits(static_cast<std::size_t>(genus), '0');
  for (int i = 0; i < genus; ++i) {
    if ((index >> i) & 1u) bits[static_cast<std::size_t>(i)] = '1';
  }
  return bits;
}

}  // namespace hirota
