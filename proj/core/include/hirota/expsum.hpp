#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hirota/cube_ring.hpp"
#include "hirota/polynomial.hpp"
#include "hirota/rational.hpp"

namespace hirota {

enum class Axis { X = 0, Y = 1, T = 2 };

// Exact frequency triple (omega_x, omega_y, omega_t) of one exponential term.
struct FreqTriple {
  Rational x, y, t;

  const Rational& axis(Axis a) const {
    switch (a) {
      case Axis::X: return x;
      case Axis::Y: return y;
      default: return t;
    }
  }

  friend FreqTriple operator+(const FreqTriple& a, const FreqTriple& b) {
    return {a.x + b.x, a.y + b.y, a.t + b.t};
  }
  friend FreqTriple operator-(const FreqTriple& a, const FreqTriple& b) {
    return {a.x - b.x, a.y - b.y, a.t - b.t};
  }
  friend bool operator==(const FreqTriple&, const FreqTriple&) = default;
  friend bool operator<(const FreqTriple& a, const FreqTriple& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.t < b.t;
  }
};

// Finite sum of exponentials  sum_k coeff_k exp(wx_k x + wy_k y + wt_k t)
// with exact rational frequencies and coefficients. Terms with equal
// frequency triples merge; zero coefficients are dropped.
class NumericExpSum {
 public:
  using Key = FreqTriple;
  using Coeff = Rational;

  NumericExpSum() = default;

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& key, const Coeff& coeff);

  NumericExpSum make_like() const { return {}; }
  void require_compatible(const NumericExpSum&) const {}
  static Key add_keys(const Key& a, const Key& b) { return a + b; }
  Coeff frequency(const Key& key, Axis axis) const { return key.axis(axis); }
  Coeff scalar(const Rational& r) const { return r; }

  friend bool operator==(const NumericExpSum& a, const NumericExpSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Key, Coeff> terms_;
};

// Formal sum of lattice exponentials  sum_c coeff_c exp(c.(ux + vy + wt))
// over integer labels c, with coefficients in the cube ring. The frequency of
// a label along x is the linear form sum_i c_i u_i, and likewise for y (v)
// and t (w).
class SymbolicExpSum {
 public:
  using Key = std::vector<int>;
  using Coeff = Polynomial;

  explicit SymbolicExpSum(CubeRing ring) : ring_(std::move(ring)) {}

  const CubeRing& cube_ring() const { return ring_; }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& key, const Coeff& coeff);

  SymbolicExpSum make_like() const { return SymbolicExpSum(ring_); }
  void require_compatible(const SymbolicExpSum& o) const;
  static Key add_keys(const Key& a, const Key& b);
  Coeff frequency(const Key& key, Axis axis) const;
  Coeff scalar(const Rational& r) const {
    return Polynomial::constant(ring_.ring(), r);
  }

  friend bool operator==(const SymbolicExpSum& a, const SymbolicExpSum& b);

 private:
  CubeRing ring_;
  std::map<Key, Coeff> terms_;
};

// theta_C = sum over cube vertices c of a_c exp(c.(ux + vy + wt)).
SymbolicExpSum symbolic_theta(const CubeRing& ring);

// Every key translated by delta; multiplying the sum by one exponential.
NumericExpSum shifted_keys(const NumericExpSum& s, const FreqTriple& delta);

template <class S>
S expsum_add(const S& a, const S& b) {
  a.require_compatible(b);
  S out = a.make_like();
  for (const auto& [k, c] : a.terms()) out.add_term(k, c);
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

template <class S>
S expsum_scale(const S& a, const Rational& c) {
  S out = a.make_like();
  if (c.is_zero()) return out;
  for (const auto& [k, coeff] : a.terms()) out.add_term(k, coeff * c);
  return out;
}

template <class S>
S expsum_mul(const S& a, const S& b) {
  a.require_compatible(b);
  S out = a.make_like();
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out.add_term(S::add_keys(ka, kb), ca * cb);
    }
  }
  return out;
}

// d/dxi applied termwise: each coefficient picks up the term's frequency
// along the axis.
template <class S>
S expsum_derivative(const S& s, Axis axis) {
  S out = s.make_like();
  for (const auto& [k, c] : s.terms()) {
    out.add_term(k, c * s.frequency(k, axis));
  }
  return out;
}

namespace detail {

template <class S>
void accumulate_scaled(S& acc, const S& x, const Rational& scale) {
  for (const auto& [k, c] : x.terms()) acc.add_term(k, c * scale);
}

}  // namespace detail

// Left side of the bilinear equation
//   tau tau_xxxx - 4 tau_xxx tau_x + 3 tau_xx^2
//   + 4 tau_x tau_t - 4 tau tau_xt + 3 tau tau_yy - 3 tau_y^2
// expanded through derivatives and products of exponential sums.
template <class S>
S hirota_form(const S& tau) {
  const S tx = expsum_derivative(tau, Axis::X);
  const S txx = expsum_derivative(tx, Axis::X);
  const S txxx = expsum_derivative(txx, Axis::X);
  const S txxxx = expsum_derivative(txxx, Axis::X);
  const S ty = expsum_derivative(tau, Axis::Y);
  const S tyy = expsum_derivative(ty, Axis::Y);
  const S tt = expsum_derivative(tau, Axis::T);
  const S txt = expsum_derivative(tx, Axis::T);

  S out = tau.make_like();
  detail::accumulate_scaled(out, expsum_mul(tau, txxxx), Rational(1));
  detail::accumulate_scaled(out, expsum_mul(txxx, tx), Rational(-4));
  detail::accumulate_scaled(out, expsum_mul(txx, txx), Rational(3));
  detail::accumulate_scaled(out, expsum_mul(tx, tt), Rational(4));
  detail::accumulate_scaled(out, expsum_mul(tau, txt), Rational(-4));
  detail::accumulate_scaled(out, expsum_mul(tau, tyy), Rational(3));
  detail::accumulate_scaled(out, expsum_mul(ty, ty), Rational(-3));
  return out;
}

// Same sum assembled from the closed pairwise form: for every unordered pair
// of distinct keys {k, l}, the key k + l receives
//   coeff_k coeff_l P(freq(k) - freq(l)),  P(x, y, t) = x^4 + 3 y^2 - 4 x t.
// Equal-key pairs contribute nothing because P(0) = 0.
template <class S>
S hirota_form_pairwise(const S& tau) {
  std::vector<const typename std::map<typename S::Key, typename S::Coeff>::value_type*> ts;
  ts.reserve(tau.terms().size());
  for (const auto& kv : tau.terms()) ts.push_back(&kv);

  S out = tau.make_like();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const auto& [ki, ci] = *ts[i];
      const auto& [kj, cj] = *ts[j];
      const typename S::Coeff dx =
          tau.frequency(ki, Axis::X) - tau.frequency(kj, Axis::X);
      const typename S::Coeff dy =
          tau.frequency(ki, Axis::Y) - tau.frequency(kj, Axis::Y);
      const typename S::Coeff dt =
          tau.frequency(ki, Axis::T) - tau.frequency(kj, Axis::T);
      typename S::Coeff p = dx * dx * dx * dx;
      p += dy * dy * Rational(3);
      p -= dx * dt * Rational(4);
      out.add_term(S::add_keys(ki, kj), ci * cj * p);
    }
  }
  return out;
}

}  // namespace hirota
