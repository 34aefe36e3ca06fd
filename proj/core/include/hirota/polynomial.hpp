#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hirota/rational.hpp"

namespace hirota {

// Immutable variable context shared by all polynomials of one ring.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::string& variable_name(int var) const;
  int variable_index(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables);

// Sparse monomial: (variable, exponent) factors sorted by variable index,
// exponents strictly positive. Ordered lexicographically by exponent vector.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial
  static Monomial variable(int var, int exp = 1);

  Monomial times(const Monomial& o) const;
  int degree() const;
  int exponent(int var) const;
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<int, int>> factors_;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rational& value);
  static Polynomial variable(RingPtr ring, int var);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { a *= c; return a; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { a *= c; return a; }
  Polynomial operator-() const;

  Polynomial derivative(int var) const;
  Polynomial pow(unsigned exp) const;

  // Total assignment, one value per ring variable.
  Rational evaluate(std::span<const Rational> values) const;

  // Canonical rendering: monomials in descending order, explicit rational
  // coefficients, e.g. "u1^4 - 4*u1*w1 + 3*v1^2".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace hirota
