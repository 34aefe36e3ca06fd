#include "hirota/expsum.hpp"

#include "hirota/errors.hpp"

namespace hirota {

void NumericExpSum::add_term(const Key& key, const Coeff& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymbolicExpSum::add_term(const Key& key, const Coeff& coeff) {
  if (static_cast<int>(key.size()) != ring_.genus()) {
    throw InputError("lattice key length does not match the ring genus");
  }
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymbolicExpSum::require_compatible(const SymbolicExpSum& o) const {
  if (!(ring_ == o.ring_)) {
    throw InputError("exponential sums live over different cube rings");
  }
}

SymbolicExpSum::Key SymbolicExpSum::add_keys(const Key& a, const Key& b) {
  if (a.size() != b.size()) {
    throw InputError("lattice keys of different length");
  }
  Key out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

SymbolicExpSum::Coeff SymbolicExpSum::frequency(const Key& key,
                                                Axis axis) const {
  Polynomial form(ring_.ring());
  for (int i = 0; i < ring_.genus(); ++i) {
    const int ci = key[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    int var = 0;
    switch (axis) {
      case Axis::X: var = ring_.u_var(i); break;
      case Axis::Y: var = ring_.v_var(i); break;
      case Axis::T: var = ring_.w_var(i); break;
    }
    form.add_term(Monomial::variable(var), Rational(ci));
  }
  return form;
}

bool operator==(const SymbolicExpSum& a, const SymbolicExpSum& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

SymbolicExpSum symbolic_theta(const CubeRing& ring) {
  SymbolicExpSum theta(ring);
  const int g = ring.genus();
  for (std::uint32_t k = 0; k < (1u << g); ++k) {
    std::vector<int> key(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
      key[static_cast<std::size_t>(i)] = static_cast<int>((k >> i) & 1u);
    }
    theta.add_term(key, ring.a_polynomial(k));
  }
  return theta;
}

NumericExpSum shifted_keys(const NumericExpSum& s, const FreqTriple& delta) {
  NumericExpSum out;
  for (const auto& [k, c] : s.terms()) out.add_term(k + delta, c);
  return out;
}

}  // namespace hirota
