#include <doctest.h>

#include <vector>

#include "hirota/generators.hpp"
#include "hirota/main_component.hpp"
#include "hirota/rng.hpp"

using hirota::ARelation;
using hirota::DirectionRatio;
using hirota::DoublePoint;
using hirota::FaceDescriptor;
using hirota::GenMode;
using hirota::HirotaPoint;
using hirota::InputError;
using hirota::MainParams;
using hirota::NotInImageError;
using hirota::Rational;
using hirota::SeededRng;
using hirota::SymmetricParams;

TEST_SUITE_BEGIN("main_component");

TEST_CASE("phi at a hand-checked node") {
  MainParams params;
  params.lambda = {Rational(2)};
  params.kappa = {Rational(3), Rational(1)};
  const HirotaPoint p = hirota::phi(params);
  CHECK(p.genus == 1);
  CHECK(p.a == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(p.u == std::vector<Rational>{Rational(2)});
  CHECK(p.v == std::vector<Rational>{Rational(8)});
  CHECK(p.w == std::vector<Rational>{Rational(26)});
}

TEST_CASE("phi coefficients combine difference products and lambdas") {
  MainParams params;
  params.lambda = {Rational(7), Rational(-1, 2)};
  params.kappa = {Rational(3), Rational(1), Rational(5), Rational(4)};
  const HirotaPoint p = hirota::phi(params);
  // Vertex (1,1) selects kappa 3 and 5; ascending order gives (3 - 5).
  CHECK(p.a[3] == Rational(3 - 5) * params.lambda[0] * params.lambda[1]);
  // Vertex (0,0) selects kappa 1 and 4.
  CHECK(p.a[0] == Rational(1 - 4));
  // Vertex (1,0) selects kappa 3 and 4.
  CHECK(p.a[1] == Rational(3 - 4) * params.lambda[0]);
  CHECK(p.u[1] == Rational(1));
  CHECK(p.v[1] == Rational(9));
  CHECK(p.w[1] == Rational(61));
}

TEST_CASE("parameterized points satisfy every reduced generator") {
  SeededRng rng(11);
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(5, rng));
  const auto set = hirota::all_generators(5, GenMode::Reduced);
  for (const Rational& value : hirota::evaluate_generators(set, p)) {
    CHECK(value.is_zero());
  }
}

TEST_CASE("invert_point undoes phi exactly") {
  SeededRng rng(12);
  for (int g = 1; g <= 4; ++g) {
    for (int trial = 0; trial < 3; ++trial) {
      const MainParams params = hirota::sample_main_params(g, rng);
      const MainParams back = hirota::invert_point(hirota::phi(params));
      CHECK(back.lambda == params.lambda);
      CHECK(back.kappa == params.kappa);
    }
  }
}

TEST_CASE("invert_point rejects bad inputs") {
  SeededRng rng(13);
  HirotaPoint p = hirota::phi(hirota::sample_main_params(2, rng));

  HirotaPoint zero_u = p;
  zero_u.u[1] = Rational(0);
  CHECK_THROWS_AS(hirota::invert_point(zero_u), InputError);

  HirotaPoint perturbed = p;
  perturbed.a[3] += Rational(1, 3);
  CHECK_THROWS_AS(hirota::invert_point(perturbed), NotInImageError);

  HirotaPoint zero_base = p;
  zero_base.a[0] = Rational(0);
  CHECK_THROWS_AS(hirota::invert_point(zero_base), NotInImageError);
}

TEST_CASE("shift rescales lambda through the torus action") {
  SeededRng rng(14);
  const MainParams params = hirota::sample_main_params(3, rng);
  const HirotaPoint p = hirota::phi(params);
  const std::vector<Rational> mu{Rational(2), Rational(-1, 5), Rational(7, 3)};
  const HirotaPoint q = hirota::shift(p, mu);

  CHECK(q.a[0] == p.a[0]);
  CHECK(q.a[7] == p.a[7] * mu[0] * mu[1] * mu[2]);
  CHECK(q.u == p.u);

  const MainParams back = hirota::invert_point(q);
  CHECK(back.kappa == params.kappa);
  for (int i = 0; i < 3; ++i) {
    CHECK(back.lambda[static_cast<std::size_t>(i)] ==
          params.lambda[static_cast<std::size_t>(i)] *
              mu[static_cast<std::size_t>(i)]);
  }

  const std::vector<Rational> bad_mu{Rational(1), Rational(0), Rational(1)};
  CHECK_THROWS_AS(hirota::shift(p, bad_mu), InputError);
  const std::vector<Rational> short_mu{Rational(1)};
  CHECK_THROWS_AS(hirota::shift(p, short_mu), InputError);
}

TEST_CASE("psi lists support products") {
  SymmetricParams params;
  params.s = {Rational(2), Rational(3)};
  params.q = {Rational(5)};
  const std::vector<Rational> a = hirota::psi(params);
  CHECK(a == std::vector<Rational>{Rational(1), Rational(2), Rational(3),
                                   Rational(30)});

  SymmetricParams bad = params;
  bad.q = {Rational(0)};
  CHECK_THROWS_AS(hirota::psi(bad), InputError);
  bad = params;
  bad.q = {Rational(1), Rational(2)};
  CHECK_THROWS_AS(hirota::psi(bad), InputError);
}

TEST_CASE("genus three has exactly one four-term relation") {
  const auto relations = hirota::enumerate_a_relations(3, 1000);
  REQUIRE(relations.size() == 1);
  ARelation expected;
  expected.left = {0, 3, 5, 6};
  expected.right = {1, 2, 4, 7};
  CHECK(relations[0] == expected);

  CHECK(hirota::enumerate_a_relations(1, 1000).empty());
  CHECK(hirota::enumerate_a_relations(2, 1000).empty());
  CHECK_THROWS_AS(hirota::enumerate_a_relations(6, 1000), InputError);
}

TEST_CASE("relations hold on both coefficient families") {
  SeededRng rng(15);
  for (int g = 3; g <= 4; ++g) {
    const auto relations = hirota::enumerate_a_relations(g, 5000);
    CHECK(!relations.empty());

    const HirotaPoint p = hirota::phi(hirota::sample_main_params(g, rng));

    SymmetricParams sym;
    for (int i = 0; i < g; ++i) sym.s.push_back(hirota::random_nonzero_rational(rng));
    for (int i = 0; i < g * (g - 1) / 2; ++i)
      sym.q.push_back(hirota::random_nonzero_rational(rng));
    const std::vector<Rational> b = hirota::psi(sym);

    for (const ARelation& r : relations) {
      CHECK(hirota::check_a_relation(p.a, r).is_zero());
      CHECK(hirota::check_a_relation(b, r).is_zero());
    }
  }
}

TEST_CASE("relation budget truncates the enumeration") {
  const auto some = hirota::enumerate_a_relations(4, 7);
  CHECK(some.size() == 7);
}

TEST_CASE("direction ratio is constant across parallel faces") {
  SeededRng rng(16);
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(3, rng));

  FaceDescriptor f1{{0, 1}, {{2, 0}}};
  FaceDescriptor f2{{0, 1}, {{2, 2}}};
  const DirectionRatio r = hirota::direction_ratio(p.a, f1, f2);
  CHECK(r.consistent);
  // First attained pair of (1,1,0) is vertices 0 and 3; flipping bit 2.
  CHECK(r.multiplier == (p.a[4] * p.a[7]) / (p.a[0] * p.a[3]));

  HirotaPoint off = p;
  off.a[7] += Rational(1);
  const DirectionRatio bad = hirota::direction_ratio(off.a, f1, f2);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("direction ratio input contract") {
  SeededRng rng(17);
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(3, rng));

  FaceDescriptor edge1{{0}, {{1, 0}, {2, 0}}};
  FaceDescriptor edge2{{0}, {{1, 2}, {2, 0}}};
  CHECK_THROWS_AS(hirota::direction_ratio(p.a, edge1, edge2), InputError);

  FaceDescriptor f1{{0, 1}, {{2, 0}}};
  FaceDescriptor other{{0, 2}, {{1, 0}}};
  CHECK_THROWS_AS(hirota::direction_ratio(p.a, f1, other), InputError);

  const std::vector<Rational> short_a(4, Rational(1));
  FaceDescriptor f2{{0, 1}, {{2, 2}}};
  CHECK_THROWS_AS(hirota::direction_ratio(short_a, f1, f2), InputError);
}

TEST_CASE("sampled parameters are valid and reproducible") {
  SeededRng rng1(42), rng2(42);
  const MainParams a = hirota::sample_main_params(4, rng1);
  const MainParams b = hirota::sample_main_params(4, rng2);
  CHECK(a.lambda == b.lambda);
  CHECK(a.kappa == b.kappa);
  CHECK_NOTHROW(a.validate());
  CHECK(a.kappa.size() == 8);
}

TEST_SUITE_END();
