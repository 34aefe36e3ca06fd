#include "hirota/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hirota/errors.hpp"

namespace hirota {

PolyRing::PolyRing(std::vector<std::string> variables)
    : names_(std::move(variables)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[static_cast<std::size_t>(i)].empty()) {
      throw InputError("empty variable name");
    }
    if (!index_.emplace(names_[static_cast<std::size_t>(i)], i).second) {
      throw InputError("duplicate variable name '" +
                       names_[static_cast<std::size_t>(i)] + "'");
    }
  }
}

const std::string& PolyRing::variable_name(int var) const {
  if (var < 0 || var >= variable_count()) {
    throw InputError("variable index out of range");
  }
  return names_[static_cast<std::size_t>(var)];
}

int PolyRing::variable_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw InputError("unknown variable '" + std::string(name) + "'");
  }
  return it->second;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

Monomial Monomial::variable(int var, int exp) {
  if (var < 0) throw InputError("negative variable index");
  if (exp < 0) throw InputError("negative exponent");
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(var, exp);
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (auto [var, exp] : factors_) d += exp;
  return d;
}

int Monomial::exponent(int var) const {
  for (auto [v, e] : factors_) {
    if (v == var) return e;
  }
  return 0;
}

bool Monomial::operator<(const Monomial& o) const {
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    const int va = a != factors_.end() ? a->first : INT32_MAX;
    const int vb = b != o.factors_.end() ? b->first : INT32_MAX;
    if (va < vb) return false;  // this has a positive exponent where o has 0
    if (vb < va) return true;
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return false;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InputError("null polynomial ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial(), value);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  Polynomial p(std::move(ring));
  if (var < 0 || var >= p.ring_->variable_count()) {
    throw InputError("variable index out of range");
  }
  p.add_term(Monomial::variable(var), Rational(1));
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw InputError("polynomial ring mismatch");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma.times(mb), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->variable_count()) {
    throw InputError("variable index out of range");
  }
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(var);
    if (e == 0) continue;
    Monomial reduced;
    for (auto [v, x] : m.factors()) {
      if (v == var) {
        reduced = reduced.times(Monomial::variable(v, x - 1));
      } else {
        reduced = reduced.times(Monomial::variable(v, x));
      }
    }
    out.add_term(reduced, c * Rational(e));
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exp) const {
  Polynomial result = Polynomial::constant(ring_, Rational(1));
  Polynomial base = *this;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != ring_->variable_count()) {
    throw InputError("evaluation needs one value per ring variable");
  }
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (auto [var, exp] : m.factors()) {
      term *= hirota::pow(values[static_cast<std::size_t>(var)],
                          static_cast<unsigned>(exp));
    }
    acc += term;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool unit_coeff = mag == Rational(1) && !m.is_unit();
    if (!unit_coeff) os << mag.to_string();
    bool need_star = !unit_coeff;
    for (auto [var, exp] : m.factors()) {
      if (need_star) os << "*";
      os << ring_->variable_name(var);
      if (exp > 1) os << "^" << exp;
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

}  // namespace hirota
