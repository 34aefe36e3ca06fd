#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hirota/certify.hpp"
#include "hirota/cube_ring.hpp"
#include "hirota/main_component.hpp"
#include "hirota/rng.hpp"

using hirota::CertMode;
using hirota::CertReport;
using hirota::CubeRing;
using hirota::GenMode;
using hirota::Generator;
using hirota::GeneratorSet;
using hirota::HirotaPoint;
using hirota::InputError;
using hirota::MainParams;
using hirota::Rational;
using hirota::RationalMatrix;
using hirota::SeededRng;

namespace {

HirotaPoint nudged(const HirotaPoint& p, std::size_t coord, const Rational& eps) {
  HirotaPoint q = p;
  const std::size_t a_block = std::size_t{1} << p.genus;
  const auto g = static_cast<std::size_t>(p.genus);
  if (coord < a_block) {
    q.a[coord] += eps;
  } else if (coord < a_block + g) {
    q.u[coord - a_block] += eps;
  } else if (coord < a_block + 2 * g) {
    q.v[coord - a_block - g] += eps;
  } else {
    q.w[coord - a_block - 2 * g] += eps;
  }
  return q;
}

// Exact two-level central difference. Generators have single-variable degree
// at most four, so the Richardson step cancels the full truncation error and
// the result equals the partial derivative.
Rational richardson(const Generator& gen, const HirotaPoint& p,
                    std::size_t coord) {
  const auto central = [&](const Rational& eps) {
    return (gen.evaluate(nudged(p, coord, eps)) -
            gen.evaluate(nudged(p, coord, -eps))) /
           (Rational(2) * eps);
  };
  const Rational eps(1, 3);
  return (Rational(4) * central(eps / Rational(2)) - central(eps)) /
         Rational(3);
}

}  // namespace

TEST_SUITE_BEGIN("certify");

TEST_CASE("mode names round trip") {
  CHECK(hirota::cert_mode_from_string("exact") == CertMode::Exact);
  CHECK(hirota::cert_mode_from_string("modular") == CertMode::Modular);
  CHECK(hirota::to_string(CertMode::Modular) == "modular");
  CHECK_THROWS_AS(hirota::cert_mode_from_string("fast"), InputError);
}

TEST_CASE("genus-one jacobian row in closed form") {
  HirotaPoint p;
  p.genus = 1;
  p.a = {Rational(1), Rational(2)};
  p.u = {Rational(2)};
  p.v = {Rational(8)};
  p.w = {Rational(26)};
  const GeneratorSet set = hirota::all_generators(1, GenMode::Reduced);
  const RationalMatrix jac = hirota::jacobian_at(set, p);
  REQUIRE(jac.rows() == 1);
  REQUIRE(jac.cols() == 5);
  CHECK(jac.at(0, 0) == Rational(0));
  CHECK(jac.at(0, 1) == Rational(0));
  CHECK(jac.at(0, 2) == Rational(4 * 8 - 4 * 26));
  CHECK(jac.at(0, 3) == Rational(6 * 8));
  CHECK(jac.at(0, 4) == Rational(-4 * 2));
}

TEST_CASE("jacobian rows match the expanded polynomial derivatives") {
  SeededRng rng(41);
  for (int g = 2; g <= 3; ++g) {
    const CubeRing ring(g);
    const HirotaPoint p = hirota::phi(hirota::sample_main_params(g, rng));
    const std::vector<Rational> assignment = hirota::point_assignment(p);
    const GeneratorSet set = hirota::all_generators(g, GenMode::Reduced);
    const RationalMatrix jac = hirota::jacobian_at(set, p);
    for (std::size_t row = 0; row < set.size(); ++row) {
      const auto expanded = set.generators()[row].expand(ring);
      for (std::size_t col = 0; col < jac.cols(); ++col) {
        CHECK(jac.at(row, col) ==
              expanded.derivative(static_cast<int>(col)).evaluate(assignment));
      }
    }
  }
}

TEST_CASE("jacobian rows match exact finite differences") {
  SeededRng rng(42);
  const int g = 2;
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(g, rng));
  const GeneratorSet set = hirota::all_generators(g, GenMode::Deduped);
  const RationalMatrix jac = hirota::jacobian_at(set, p);
  for (std::size_t row = 0; row < set.size(); ++row) {
    for (std::size_t col = 0; col < jac.cols(); ++col) {
      CHECK(jac.at(row, col) == richardson(set.generators()[row], p, col));
    }
  }
}

TEST_CASE("jacobian is independent of the thread count") {
  SeededRng rng(43);
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(3, rng));
  const GeneratorSet set = hirota::all_generators(3, GenMode::Reduced);
  const RationalMatrix serial = hirota::jacobian_at(set, p, 1);
  const RationalMatrix parallel = hirota::jacobian_at(set, p, 4);
  REQUIRE(serial.rows() == parallel.rows());
  for (std::size_t i = 0; i < serial.rows(); ++i) {
    for (std::size_t j = 0; j < serial.cols(); ++j) {
      CHECK(serial.at(i, j) == parallel.at(i, j));
    }
  }
}

TEST_CASE("exact certificates for small genus") {
  for (int g = 1; g <= 4; ++g) {
    const CertReport r = hirota::certify_main_component(g, 42, CertMode::Exact);
    CHECK(r.verdict);
    CHECK(r.generators_vanish);
    CHECK(r.jacobian_rank == (std::size_t{1} << g) - 1);
    CHECK(r.expected_rank == r.jacobian_rank);
    CHECK(r.tangent_dim_affine == 3 * static_cast<std::size_t>(g) + 1);
    CHECK(r.main_component_dim_projective == 3 * static_cast<std::size_t>(g));
    CHECK(r.primes.empty());
    CHECK(r.attempts == 1);
    CHECK(r.timings_ms.count("rank") == 1);
    CHECK(r.timings_ms.count("total") == 1);
  }
}

TEST_CASE("modular certificates agree with exact ones") {
  for (int g = 1; g <= 4; ++g) {
    const CertReport exact = hirota::certify_main_component(g, 7, CertMode::Exact);
    const CertReport mod = hirota::certify_main_component(g, 7, CertMode::Modular);
    CHECK(mod.verdict);
    CHECK(mod.jacobian_rank == exact.jacobian_rank);
    REQUIRE(mod.primes.size() == 2);
    CHECK(mod.primes[0] != mod.primes[1]);
    for (std::uint64_t p : mod.primes) {
      CHECK(p >= (1ull << 62));
      CHECK(p < (1ull << 63));
      CHECK(hirota::is_probable_prime(p));
    }
  }
}

TEST_CASE("certificates are reproducible for a fixed seed") {
  const CertReport a = hirota::certify_main_component(3, 99, CertMode::Modular);
  const CertReport b = hirota::certify_main_component(3, 99, CertMode::Modular);
  CHECK(a.primes == b.primes);
  CHECK(a.jacobian_rank == b.jacobian_rank);
  CHECK(a.verdict == b.verdict);
  CHECK(a.attempts == b.attempts);
}

TEST_CASE("genus caps per mode") {
  CHECK_THROWS_AS(hirota::certify_main_component(7, 1, CertMode::Exact),
                  InputError);
  CHECK_THROWS_AS(hirota::certify_main_component(10, 1, CertMode::Modular),
                  InputError);
  CHECK_THROWS_AS(hirota::certify_main_component(0, 1, CertMode::Exact),
                  InputError);
}

TEST_CASE("rank is unchanged by the torus action") {
  SeededRng rng(44);
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(3, rng));
  const std::vector<Rational> mu{Rational(3), Rational(-2, 7), Rational(5, 2)};
  const HirotaPoint q = hirota::shift(p, mu);
  const GeneratorSet set = hirota::all_generators(3, GenMode::Reduced);
  CHECK(hirota::rank_exact(hirota::jacobian_at(set, p)) ==
        hirota::rank_exact(hirota::jacobian_at(set, q)));
}

TEST_CASE("reduced and deduped jacobians have equal rank") {
  SeededRng rng(45);
  for (int g = 2; g <= 4; ++g) {
    const HirotaPoint p = hirota::phi(hirota::sample_main_params(g, rng));
    const auto reduced = hirota::all_generators(g, GenMode::Reduced);
    const auto deduped = hirota::all_generators(g, GenMode::Deduped);
    const std::size_t r1 = hirota::rank_exact(hirota::jacobian_at(reduced, p));
    const std::size_t r2 = hirota::rank_exact(hirota::jacobian_at(deduped, p));
    CHECK(r1 == r2);
    CHECK(r1 == (std::size_t{1} << g) - 1);
  }
}

TEST_SUITE_END();
