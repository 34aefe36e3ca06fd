#include <doctest.h>

#include <vector>

#include "hirota/polynomial.hpp"

using hirota::InputError;
using hirota::Monomial;
using hirota::Polynomial;
using hirota::Rational;
using hirota::RingPtr;

namespace {

RingPtr uvw_ring() { return hirota::make_ring({"u1", "v1", "w1"}); }

Polynomial var(const RingPtr& r, int i) { return Polynomial::variable(r, i); }

}  // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("ring construction validates names") {
  CHECK_THROWS_AS(hirota::make_ring({"x", "x"}), InputError);
  CHECK_THROWS_AS(hirota::make_ring({""}), InputError);
  const RingPtr r = uvw_ring();
  CHECK(r->variable_index("w1") == 2);
  CHECK_THROWS_AS(r->variable_index("z"), InputError);
}

TEST_CASE("product of conjugates") {
  const RingPtr r = uvw_ring();
  const Polynomial one = Polynomial::constant(r, Rational(1));
  const Polynomial u = var(r, 0);
  const Polynomial p = (u + one) * (u - one);
  Polynomial expected = u * u;
  expected -= one;
  CHECK(p == expected);
  CHECK(p.degree() == 2);
}

TEST_CASE("derivative of the edge quartic") {
  const RingPtr r = uvw_ring();
  const Polynomial u = var(r, 0), v = var(r, 1), w = var(r, 2);
  Polynomial quartic = u.pow(4);
  quartic += v * v * Rational(3);
  quartic -= u * w * Rational(4);

  Polynomial du = u.pow(3) * Rational(4);
  du -= w * Rational(4);
  CHECK(quartic.derivative(0) == du);
  CHECK(quartic.derivative(1) == v * Rational(6));
  CHECK(quartic.derivative(2) == u * Rational(-4));
}

TEST_CASE("evaluation, including the on-variety example") {
  const RingPtr r = uvw_ring();
  const Polynomial u = var(r, 0), v = var(r, 1), w = var(r, 2);
  Polynomial quartic = u.pow(4);
  quartic += v * v * Rational(3);
  quartic -= u * w * Rational(4);

  const std::vector<Rational> pt = {Rational(2), Rational(8), Rational(26)};
  CHECK(quartic.evaluate(pt) == Rational(0));  // 16 + 192 - 208

  const std::vector<Rational> off = {Rational(1), Rational(0), Rational(0)};
  CHECK(quartic.evaluate(off) == Rational(1));

  const std::vector<Rational> wrong_size = {Rational(1)};
  CHECK_THROWS_AS(quartic.evaluate(wrong_size), InputError);
}

TEST_CASE("ring mismatch is rejected") {
  const RingPtr r1 = uvw_ring();
  const RingPtr r2 = hirota::make_ring({"x"});
  CHECK_THROWS_AS(var(r1, 0) + var(r2, 0), InputError);
  // Equal variable lists are the same ring even via different pointers.
  const RingPtr r3 = hirota::make_ring({"u1", "v1", "w1"});
  CHECK(var(r1, 0) == var(r3, 0));
}

TEST_CASE("canonical text rendering") {
  const RingPtr r = uvw_ring();
  const Polynomial u = var(r, 0), v = var(r, 1), w = var(r, 2);
  Polynomial quartic = u.pow(4);
  quartic += v * v * Rational(3);
  quartic -= u * w * Rational(4);
  CHECK(quartic.to_string() == "u1^4 - 4*u1*w1 + 3*v1^2");
  CHECK(Polynomial(r).to_string() == "0");
  CHECK(Polynomial::constant(r, Rational(-1, 2)).to_string() == "-1/2");
  CHECK((u * Rational(1, 3)).to_string() == "1/3*u1");
}

TEST_CASE("pow matches repeated multiplication") {
  const RingPtr r = uvw_ring();
  const Polynomial base = var(r, 0) + var(r, 1) * Rational(2);
  Polynomial by_mul = Polynomial::constant(r, Rational(1));
  for (int i = 0; i < 5; ++i) by_mul = by_mul * base;
  CHECK(base.pow(5) == by_mul);
  CHECK(base.pow(0) == Polynomial::constant(r, Rational(1)));
}

TEST_CASE("degree and coefficient lookup") {
  const RingPtr r = uvw_ring();
  const Polynomial u = var(r, 0), v = var(r, 1);
  const Polynomial p = u.pow(3) * v + v * Rational(5);
  CHECK(p.degree() == 4);
  CHECK(p.coefficient(Monomial::variable(1)) == Rational(5));
  CHECK(p.coefficient(Monomial::variable(0, 3).times(Monomial::variable(1))) ==
        Rational(1));
  CHECK(p.coefficient(Monomial::variable(2)) == Rational(0));
}

TEST_SUITE_END();
