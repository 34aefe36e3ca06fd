#include "hirota/main_component.hpp"

#include <algorithm>
#include <map>

#include "hirota/errors.hpp"

namespace hirota {

namespace {

// Vandermonde product prod_{p<q} (kappa[I[p]] - kappa[I[q]]) over ascending I.
Rational vandermonde(std::span<const Rational> kappa,
                     std::span<const int> indices) {
  Rational prod(1);
  for (std::size_t p = 0; p < indices.size(); ++p) {
    for (std::size_t q = p + 1; q < indices.size(); ++q) {
      prod *= kappa[static_cast<std::size_t>(indices[p])] -
              kappa[static_cast<std::size_t>(indices[q])];
    }
  }
  return prod;
}

// Kappa indices chosen by a vertex: 2i for c_i = 1, 2i+1 for c_i = 0
// (0-based; ascending by construction).
std::vector<int> vertex_kappa_indices(int genus, std::uint32_t c) {
  std::vector<int> indices(static_cast<std::size_t>(genus));
  for (int i = 0; i < genus; ++i) {
    indices[static_cast<std::size_t>(i)] =
        ((c >> i) & 1u) ? 2 * i : 2 * i + 1;
  }
  return indices;
}

}  // namespace

HirotaPoint phi(const MainParams& params) {
  params.validate();
  const int g = params.genus();
  HirotaPoint p;
  p.genus = g;
  p.u.reserve(static_cast<std::size_t>(g));
  p.v.reserve(static_cast<std::size_t>(g));
  p.w.reserve(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    const Rational& k1 = params.kappa[static_cast<std::size_t>(2 * i)];
    const Rational& k2 = params.kappa[static_cast<std::size_t>(2 * i + 1)];
    p.u.push_back(k1 - k2);
    p.v.push_back(k1 * k1 - k2 * k2);
    p.w.push_back(k1 * k1 * k1 - k2 * k2 * k2);
  }
  p.a.reserve(std::size_t{1} << g);
  for (std::uint32_t c = 0; c < (1u << g); ++c) {
    Rational ac = vandermonde(params.kappa, vertex_kappa_indices(g, c));
    for (int i = 0; i < g; ++i) {
      if ((c >> i) & 1u) ac *= params.lambda[static_cast<std::size_t>(i)];
    }
    p.a.push_back(std::move(ac));
  }
  return p;
}

MainParams invert_point(const HirotaPoint& p) {
  p.validate();
  const int g = p.genus;
  MainParams params;
  params.kappa.resize(2 * static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    const Rational& ui = p.u[static_cast<std::size_t>(i)];
    const Rational& vi = p.v[static_cast<std::size_t>(i)];
    if (ui.is_zero()) {
      throw InputError("u coordinates must be nonzero to recover kappa");
    }
    const Rational two_u = Rational(2) * ui;
    params.kappa[static_cast<std::size_t>(2 * i)] = (ui * ui + vi) / two_u;
    params.kappa[static_cast<std::size_t>(2 * i + 1)] = (vi - ui * ui) / two_u;
  }
  if (p.a[0].is_zero()) {
    throw NotInImageError("a_0 vanishes, cannot normalize lambda");
  }
  const Rational v0 = vandermonde(params.kappa, vertex_kappa_indices(g, 0));
  params.lambda.resize(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    const std::uint32_t ei = 1u << i;
    const Rational vi = vandermonde(params.kappa, vertex_kappa_indices(g, ei));
    if (vi.is_zero()) {
      throw NotInImageError("recovered kappa values collide");
    }
    params.lambda[static_cast<std::size_t>(i)] = (p.a[ei] / p.a[0]) * (v0 / vi);
  }
  // Round trip: the shape checks above cannot tell image points from
  // impostors, recomputing phi can.
  for (const Rational& l : params.lambda) {
    if (l.is_zero()) throw NotInImageError("recovered lambda vanishes");
  }
  for (std::size_t i = 0; i < params.kappa.size(); ++i) {
    for (std::size_t j = i + 1; j < params.kappa.size(); ++j) {
      if (params.kappa[i] == params.kappa[j]) {
        throw NotInImageError("recovered kappa values collide");
      }
    }
  }
  const HirotaPoint back = phi(params);
  if (back.a != p.a || back.u != p.u || back.v != p.v || back.w != p.w) {
    throw NotInImageError("round trip through the parameterization failed");
  }
  return params;
}

HirotaPoint shift(const HirotaPoint& p, std::span<const Rational> mu) {
  p.validate();
  if (static_cast<int>(mu.size()) != p.genus) {
    throw InputError("shift needs one multiplier per coordinate");
  }
  for (const Rational& m : mu) {
    if (m.is_zero()) throw InputError("shift multipliers must be nonzero");
  }
  HirotaPoint out = p;
  for (std::uint32_t c = 0; c < out.a.size(); ++c) {
    for (int i = 0; i < p.genus; ++i) {
      if ((c >> i) & 1u) out.a[c] *= mu[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<Rational> psi(const SymmetricParams& params) {
  params.validate();
  const int g = params.genus();
  std::vector<Rational> a;
  a.reserve(std::size_t{1} << g);
  for (std::uint32_t c = 0; c < (1u << g); ++c) {
    Rational ac(1);
    for (int i = 0; i < g; ++i) {
      if (!((c >> i) & 1u)) continue;
      ac *= params.s[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < g; ++j) {
        if ((c >> j) & 1u) ac *= params.q_at(i, j);
      }
    }
    a.push_back(std::move(ac));
  }
  return a;
}

std::vector<ARelation> enumerate_a_relations(int genus, std::size_t budget) {
  if (genus < 1 || genus > 5) {
    throw InputError("exhaustive relation enumeration needs genus <= 5");
  }
  const std::uint32_t n = 1u << genus;
  // Signature: coordinate sums plus the upper Gram triangle of
  // sum_i c_i c_i^T; the diagonal repeats the coordinate sums.
  using Signature = std::vector<int>;
  using Multiset = std::array<std::uint32_t, 4>;
  std::map<Signature, std::vector<Multiset>> groups;

  Signature sig(static_cast<std::size_t>(genus + genus * (genus - 1) / 2));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      for (std::uint32_t k = j; k < n; ++k) {
        for (std::uint32_t l = k; l < n; ++l) {
          const Multiset m{i, j, k, l};
          std::fill(sig.begin(), sig.end(), 0);
          for (std::uint32_t c : m) {
            std::size_t pos = 0;
            for (int p = 0; p < genus; ++p) {
              sig[pos++] += static_cast<int>((c >> p) & 1u);
            }
            for (int p = 0; p < genus; ++p) {
              if (!((c >> p) & 1u)) {
                pos += static_cast<std::size_t>(genus - p - 1);
                continue;
              }
              for (int q = p + 1; q < genus; ++q) {
                sig[pos++] += static_cast<int>((c >> q) & 1u);
              }
            }
          }
          groups[sig].push_back(m);
        }
      }
    }
  }

  std::vector<ARelation> out;
  for (const auto& [signature, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (out.size() >= budget) return out;
        ARelation r;
        r.left = members[i];
        r.right = members[j];
        out.push_back(r);
      }
    }
  }
  return out;
}

Rational check_a_relation(std::span<const Rational> a, const ARelation& r) {
  Rational left(1), right(1);
  for (std::uint32_t c : r.left) {
    if (c >= a.size()) throw InputError("relation index out of range");
    left *= a[c];
  }
  for (std::uint32_t c : r.right) {
    if (c >= a.size()) throw InputError("relation index out of range");
    right *= a[c];
  }
  return left - right;
}

DirectionRatio direction_ratio(std::span<const Rational> a,
                               const FaceDescriptor& f1,
                               const FaceDescriptor& f2) {
  if (f1.direction.size() < 2) {
    throw InputError("direction ratio needs faces of dimension >= 2");
  }
  if (a.size() != (std::size_t{1} << f1.genus())) {
    throw InputError("direction ratio needs 2^genus theta coefficients");
  }
  const std::set<int> diff = difference(f1, f2);  // validates directions
  std::uint32_t flip = 0;
  for (int i : diff) flip |= 1u << i;

  const std::vector<VertexPair> pairs = attained_pairs(f1.double_point());
  DirectionRatio out;
  out.consistent = true;
  bool have_first = false;
  for (const VertexPair& vp : pairs) {
    const std::uint32_t k = vp.first.index();
    const std::uint32_t l = vp.second.index();
    const Rational den = a[k] * a[l];
    if (den.is_zero()) {
      throw InputError("direction ratio undefined: a_k a_l vanishes");
    }
    const Rational ratio = (a[k ^ flip] * a[l ^ flip]) / den;
    if (!have_first) {
      out.multiplier = ratio;
      have_first = true;
    } else if (!(ratio == out.multiplier)) {
      out.consistent = false;
    }
  }
  return out;
}

MainParams sample_main_params(int genus, SeededRng& rng) {
  if (genus < 1 || genus > kMaxGenus) throw InputError("genus out of range");
  MainParams params;
  params.lambda.reserve(static_cast<std::size_t>(genus));
  for (int i = 0; i < genus; ++i) {
    params.lambda.push_back(random_nonzero_rational(rng));
  }
  params.kappa = random_distinct_rationals(rng, 2 * genus);
  return params;
}

}  // namespace hirota
