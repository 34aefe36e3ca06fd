#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hirota/errors.hpp"

namespace hirota {

// Arbitrary-precision rational, always canonical: gcd(num, den) = 1, den > 0.
// String form is "num" or "num/den" with an optional leading sign; anything
// else (floats, exponents, whitespace) is rejected.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : q_(static_cast<signed long>(n)) {}   // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from_string(std::string_view s);
  std::string to_string() const;

  const mpq_class& mpq() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r(a); r /= b; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exp);
Rational abs(const Rational& x);

}  // namespace hirota
