#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hirota/cube.hpp"
#include "hirota/cube_ring.hpp"
#include "hirota/point.hpp"
#include "hirota/polynomial.hpp"

namespace hirota {

// Generator listing schemes for the Hirota ideal of the cube:
//   PerPoint - one generator per double point (3^g - 2^g of them),
//   Deduped  - one per edge direction plus one per face of dimension >= 2,
//   Reduced  - one per nonempty direction set D, at the canonical face
//              sum_{i in D} e_i (2^g - 1 of them).
enum class GenMode { PerPoint, Deduped, Reduced };

std::string_view to_string(GenMode mode);
GenMode gen_mode_from_string(std::string_view name);

// One unordered vertex pair (lo, hi) attaining a double point, with the
// coordinate difference delta = coords(hi) - coords(lo) in {-1,0,1}^g.
struct AttainedPair {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::vector<int> delta;

  friend bool operator==(const AttainedPair&, const AttainedPair&) = default;
};

// One ideal generator, stored structurally as its attained pairs. With
// P(x, y, t) = x^4 + 3 y^2 - 4 x t and hats the pairings of delta against
// (u, v, w), the polynomial is
//   sum over pairs of a_lo a_hi P(delta.u, delta.v, delta.w),
// except that a uniquely attained point (a single pair) drops the a-factor
// and keeps the bare quartic.
class Generator {
 public:
  Generator(DoublePoint label, std::vector<AttainedPair> pairs);

  const DoublePoint& label() const { return label_; }
  int genus() const { return label_.genus(); }
  bool uniquely_attained() const { return pairs_.size() == 1; }
  std::span<const AttainedPair> pairs() const { return pairs_; }

  // Structural evaluation; never expands the polynomial.
  Rational evaluate(const HirotaPoint& p) const;

  // Full expansion over the cube ring, for serialization and cross-checks.
  Polynomial expand(const CubeRing& ring) const;

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.label_ == b.label_ && a.pairs_ == b.pairs_;
  }

 private:
  DoublePoint label_;
  std::vector<AttainedPair> pairs_;
};

class GeneratorSet {
 public:
  GeneratorSet(int genus, GenMode mode, std::vector<Generator> generators);

  int genus() const { return genus_; }
  GenMode mode() const { return mode_; }
  std::span<const Generator> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.genus_ == b.genus_ && a.mode_ == b.mode_ &&
           a.generators_ == b.generators_;
  }

 private:
  int genus_;
  GenMode mode_;
  std::vector<Generator> generators_;
};

// Generator attached to one double point.
Generator generator_for(const DoublePoint& d);

// The full listing for a genus: PerPoint needs genus <= 7, the deduplicated
// schemes genus <= 9.
GeneratorSet all_generators(int genus, GenMode mode);

std::vector<Rational> evaluate_generators(const GeneratorSet& set,
                                          const HirotaPoint& p);

}  // namespace hirota
