#include "hirota/rational.hpp"

#include <cctype>
#include <ostream>

namespace hirota {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(static_cast<signed long>(num)) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ /= mpq_class(static_cast<signed long>(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(s) +
                     "': expected [sign]digits[/digits]");
  }
  mpq_class q(std::string(negative ? "-" : "") + std::string(num) + "/" +
                  std::string(den),
              10);
  if (mpz_sgn(q.get_den().get_mpz_t()) == 0) {
    throw InputError("rational with zero denominator '" + std::string(s) + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, unsigned exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den().get_mpz_t(), exp);
  return Rational(mpq_class(num, den));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace hirota
