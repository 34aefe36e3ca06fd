#include <doctest.h>

#include "hirota/rational.hpp"

using hirota::InputError;
using hirota::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parsing normalizes to canonical form") {
  CHECK(Rational::from_string("3/6").to_string() == "1/2");
  CHECK(Rational::from_string("-4/2").to_string() == "-2");
  CHECK(Rational::from_string("+7/3").to_string() == "7/3");
  CHECK(Rational::from_string("0/9").to_string() == "0");
  CHECK(Rational::from_string("12").to_string() == "12");
  CHECK(Rational::from_string("007").to_string() == "7");
}

TEST_CASE("float and garbage literals are rejected") {
  for (const char* bad : {"1.5", "1e3", "", " 1", "1 ", "1/", "/2", "1//2",
                          "0x10", "1/-2", "--3", "nan", "1.0/2"}) {
    CHECK_THROWS_AS(Rational::from_string(bad), InputError);
  }
  CHECK_THROWS_AS(Rational::from_string("1/0"), InputError);
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).to_string() == "-1/3");
  CHECK_THROWS_AS(a / Rational(0), InputError);
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("comparisons follow the rational order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("pow and abs") {
  CHECK(hirota::pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(hirota::pow(Rational(5), 0) == Rational(1));
  CHECK(hirota::abs(Rational(-7, 4)) == Rational(7, 4));
}

TEST_CASE("large intermediate values stay exact") {
  Rational x(1);
  for (int i = 1; i <= 40; ++i) x *= Rational(i, i + 1);
  Rational y(1);
  for (int i = 40; i >= 1; --i) y *= Rational(i, i + 1);
  CHECK(x == y);
  CHECK(x == Rational(1, 41));
}

TEST_SUITE_END();
