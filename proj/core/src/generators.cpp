#include "hirota/generators.hpp"

#include <algorithm>

#include "hirota/errors.hpp"

namespace hirota {

std::string_view to_string(GenMode mode) {
  switch (mode) {
    case GenMode::PerPoint: return "per-point";
    case GenMode::Deduped: return "deduped";
    default: return "reduced";
  }
}

GenMode gen_mode_from_string(std::string_view name) {
  if (name == "per-point") return GenMode::PerPoint;
  if (name == "deduped") return GenMode::Deduped;
  if (name == "reduced") return GenMode::Reduced;
  throw InputError("unknown generator mode '" + std::string(name) +
                   "' (expected per-point, deduped or reduced)");
}

Generator::Generator(DoublePoint label, std::vector<AttainedPair> pairs)
    : label_(std::move(label)), pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InputError("generator needs at least one pair");
}

Rational Generator::evaluate(const HirotaPoint& p) const {
  if (p.genus != genus()) throw InputError("point genus mismatch");
  const bool unique = uniquely_attained();
  Rational acc(0);
  for (const AttainedPair& pair : pairs_) {
    Rational du(0), dv(0), dw(0);
    for (int i = 0; i < p.genus; ++i) {
      const int d = pair.delta[static_cast<std::size_t>(i)];
      if (d == 0) continue;
      const auto idx = static_cast<std::size_t>(i);
      if (d == 1) {
        du += p.u[idx];
        dv += p.v[idx];
        dw += p.w[idx];
      } else {
        du -= p.u[idx];
        dv -= p.v[idx];
        dw -= p.w[idx];
      }
    }
    Rational quartic = du * du;
    quartic *= quartic;
    quartic += Rational(3) * dv * dv;
    quartic -= Rational(4) * du * dw;
    if (!unique) quartic *= p.a[pair.lo] * p.a[pair.hi];
    acc += quartic;
  }
  return acc;
}

Polynomial Generator::expand(const CubeRing& ring) const {
  if (ring.genus() != genus()) throw InputError("ring genus mismatch");
  const bool unique = uniquely_attained();
  Polynomial out(ring.ring());
  for (const AttainedPair& pair : pairs_) {
    Polynomial lu(ring.ring());
    Polynomial lv(ring.ring());
    Polynomial lw(ring.ring());
    for (int i = 0; i < ring.genus(); ++i) {
      const int d = pair.delta[static_cast<std::size_t>(i)];
      if (d == 0) continue;
      lu.add_term(Monomial::variable(ring.u_var(i)), Rational(d));
      lv.add_term(Monomial::variable(ring.v_var(i)), Rational(d));
      lw.add_term(Monomial::variable(ring.w_var(i)), Rational(d));
    }
    Polynomial quartic = lu.pow(4);
    quartic += lv * lv * Rational(3);
    quartic -= lu * lw * Rational(4);
    if (!unique) {
      quartic = quartic * (ring.a_polynomial(pair.lo) * ring.a_polynomial(pair.hi));
    }
    out += quartic;
  }
  return out;
}

GeneratorSet::GeneratorSet(int genus, GenMode mode,
                           std::vector<Generator> generators)
    : genus_(genus), mode_(mode), generators_(std::move(generators)) {
  for (const Generator& gen : generators_) {
    if (gen.genus() != genus_) {
      throw InputError("generator genus does not match the set");
    }
  }
}

Generator generator_for(const DoublePoint& d) {
  std::vector<AttainedPair> pairs;
  for (const VertexPair& vp : attained_pairs(d)) {
    AttainedPair pair;
    pair.lo = vp.first.index();
    pair.hi = vp.second.index();
    pair.delta.resize(static_cast<std::size_t>(d.genus()));
    for (int i = 0; i < d.genus(); ++i) {
      pair.delta[static_cast<std::size_t>(i)] =
          vp.second.coord(i) - vp.first.coord(i);
    }
    pairs.push_back(std::move(pair));
  }
  return Generator(d, std::move(pairs));
}

GeneratorSet all_generators(int genus, GenMode mode) {
  const int cap = mode == GenMode::PerPoint ? 7 : 9;
  if (genus < 1 || genus > cap) {
    throw InputError("genus must be in [1, " + std::to_string(cap) +
                     "] for mode " + std::string(to_string(mode)));
  }
  std::vector<Generator> gens;
  switch (mode) {
    case GenMode::PerPoint: {
      for (const DoublePoint& d : double_points(genus)) {
        gens.push_back(generator_for(d));
      }
      break;
    }
    case GenMode::Deduped: {
      // One canonical edge per direction: all parallel edges share the same
      // bare quartic, so a single representative suffices.
      for (int i = 0; i < genus; ++i) {
        std::vector<int> coords(static_cast<std::size_t>(genus), 0);
        coords[static_cast<std::size_t>(i)] = 1;
        gens.push_back(generator_for(DoublePoint(std::move(coords))));
      }
      for (const DoublePoint& d : double_points(genus)) {
        if (d.ones() >= 2) gens.push_back(generator_for(d));
      }
      break;
    }
    case GenMode::Reduced: {
      // Canonical face per nonempty direction set D: the double point
      // sum_{i in D} e_i, ordered by the D bitmask.
      for (std::uint32_t mask = 1; mask < (1u << genus); ++mask) {
        std::vector<int> coords(static_cast<std::size_t>(genus), 0);
        for (int i = 0; i < genus; ++i) {
          if ((mask >> i) & 1u) coords[static_cast<std::size_t>(i)] = 1;
        }
        gens.push_back(generator_for(DoublePoint(std::move(coords))));
      }
      break;
    }
  }
  return GeneratorSet(genus, mode, std::move(gens));
}

std::vector<Rational> evaluate_generators(const GeneratorSet& set,
                                          const HirotaPoint& p) {
  p.validate();
  if (p.genus != set.genus()) throw InputError("point genus mismatch");
  std::vector<Rational> values;
  values.reserve(set.size());
  for (const Generator& gen : set.generators()) {
    values.push_back(gen.evaluate(p));
  }
  return values;
}

}  // namespace hirota
