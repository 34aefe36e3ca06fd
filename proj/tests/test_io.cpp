#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "hirota/certify.hpp"
#include "hirota/io.hpp"
#include "hirota/main_component.hpp"
#include "hirota/rng.hpp"
#include "hirota/soliton.hpp"

using hirota::CertMode;
using hirota::CertReport;
using hirota::GenMode;
using hirota::GeneratorSet;
using hirota::HirotaPoint;
using hirota::InputError;
using hirota::MainParams;
using hirota::Rational;
using hirota::SeededRng;
using hirota::SolitonData;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("point json round trip") {
  SeededRng rng(61);
  HirotaPoint p = hirota::phi(hirota::sample_main_params(2, rng));
  p.a[0] = Rational(1, 2);
  const std::string text = hirota::point_to_json(p);
  CHECK(contains(text, "\"schema\": 1"));
  CHECK(contains(text, "\"1/2\""));
  const HirotaPoint back = hirota::point_from_json(text);
  CHECK(back.genus == p.genus);
  CHECK(back.a == p.a);
  CHECK(back.u == p.u);
  CHECK(back.v == p.v);
  CHECK(back.w == p.w);
}

TEST_CASE("rationals canonicalize while parsing") {
  const std::string text = R"({
    "genus": 1,
    "a": ["3/6", "-4/2"],
    "u": ["2"], "v": ["8"], "w": ["26"]
  })";
  const HirotaPoint p = hirota::point_from_json(text);
  CHECK(p.a[0] == Rational(1, 2));
  CHECK(p.a[1] == Rational(-2));
}

TEST_CASE("rational fields reject number literals") {
  const std::string float_field = R"({
    "genus": 1,
    "a": ["1", "2"],
    "u": [0.5], "v": ["8"], "w": ["26"]
  })";
  CHECK_THROWS_AS(hirota::point_from_json(float_field), InputError);

  const std::string int_field = R"({
    "genus": 1,
    "a": ["1", "2"],
    "u": [2], "v": ["8"], "w": ["26"]
  })";
  CHECK_THROWS_AS(hirota::point_from_json(int_field), InputError);

  const std::string bad_string = R"({
    "genus": 1,
    "a": ["1", "2"],
    "u": ["1.5"], "v": ["8"], "w": ["26"]
  })";
  CHECK_THROWS_AS(hirota::point_from_json(bad_string), InputError);
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(hirota::point_from_json("{"), InputError);
  CHECK_THROWS_AS(hirota::point_from_json("[1, 2]"), InputError);
  CHECK_THROWS_AS(hirota::point_from_json("{\"schema\": 2, \"genus\": 1}"),
                  InputError);
  CHECK_THROWS_AS(hirota::point_from_json("{\"genus\": 1, \"a\": 5}"),
                  InputError);
  const std::string wrong_shape = R"({
    "genus": 2,
    "a": ["1", "2"],
    "u": ["1", "1"], "v": ["1", "1"], "w": ["1", "1"]
  })";
  CHECK_THROWS_AS(hirota::point_from_json(wrong_shape), InputError);
}

TEST_CASE("params json round trip") {
  SeededRng rng(62);
  const MainParams params = hirota::sample_main_params(3, rng);
  const MainParams back = hirota::params_from_json(hirota::params_to_json(params));
  CHECK(back.lambda == params.lambda);
  CHECK(back.kappa == params.kappa);

  const std::string disagree = R"({
    "genus": 2,
    "lambda": ["1"],
    "kappa": ["1", "2"]
  })";
  CHECK_THROWS_AS(hirota::params_from_json(disagree), InputError);
}

TEST_CASE("soliton json round trip") {
  SeededRng rng(63);
  SolitonData data;
  data.k = 2;
  data.n = 4;
  data.kappa = hirota::random_distinct_rationals(rng, 4);
  data.pluecker =
      hirota::pluecker_minors(hirota::random_full_rank_matrix(2, 4, rng));
  const std::string text = hirota::soliton_to_json(data);
  CHECK(contains(text, "\"1,2\""));
  const SolitonData back = hirota::soliton_from_json(text);
  CHECK(back.k == data.k);
  CHECK(back.n == data.n);
  CHECK(back.kappa == data.kappa);
  CHECK(back.pluecker == data.pluecker);
}

TEST_CASE("soliton json accepts a matrix instead of minors") {
  const std::string text = R"({
    "k": 2, "n": 4,
    "kappa": ["1", "2", "4", "8"],
    "matrix": [["1", "0", "1", "2"], ["0", "1", "3", "4"]]
  })";
  const SolitonData data = hirota::soliton_from_json(text);
  REQUIRE(data.pluecker.size() == 6);
  CHECK(data.pluecker[0].first == std::vector<int>{0, 1});
  CHECK(data.pluecker[0].second == Rational(1));
  CHECK(data.pluecker[5].second == Rational(-2));

  const std::string neither = R"({"k": 2, "n": 4, "kappa": ["1","2","3","4"]})";
  CHECK_THROWS_AS(hirota::soliton_from_json(neither), InputError);
  const std::string bad_key = R"({
    "k": 1, "n": 2, "kappa": ["1", "2"],
    "pluecker": {"x": "1"}
  })";
  CHECK_THROWS_AS(hirota::soliton_from_json(bad_key), InputError);
}

TEST_CASE("generator sets round trip through their labels") {
  for (GenMode mode : {GenMode::PerPoint, GenMode::Deduped, GenMode::Reduced}) {
    const GeneratorSet set = hirota::all_generators(3, mode);
    const std::string text = hirota::generators_to_json(set);
    const GeneratorSet back = hirota::generators_from_json(text);
    CHECK(back == set);
    CHECK(contains(text, "\"mode\": \"" + std::string(to_string(mode)) + "\""));
    CHECK(contains(text, "\"direction\"") == (mode == GenMode::Reduced));
  }
  const std::string text =
      hirota::generators_to_json(hirota::all_generators(2, GenMode::Reduced));
  CHECK(contains(text, "\"coeff_num\""));
  CHECK(contains(text, "\"a_10\""));
}

TEST_CASE("report json round trip") {
  const CertReport report = hirota::certify_main_component(2, 5, CertMode::Modular);
  const std::string text = hirota::report_to_json(report);
  CHECK(contains(text, "\"primes\""));
  CHECK(contains(text, "\"timings_ms\""));
  const CertReport back = hirota::report_from_json(text);
  CHECK(back.genus == report.genus);
  CHECK(back.seed == report.seed);
  CHECK(back.mode == report.mode);
  CHECK(back.primes == report.primes);
  CHECK(back.jacobian_rank == report.jacobian_rank);
  CHECK(back.verdict == report.verdict);
  CHECK(back.timings_ms.size() == report.timings_ms.size());

  const std::string lean = hirota::report_to_json(report, false);
  CHECK(!contains(lean, "timings_ms"));

  const CertReport exact = hirota::certify_main_component(2, 5, CertMode::Exact);
  CHECK(!contains(hirota::report_to_json(exact), "primes"));
}

TEST_CASE("reports with one seed serialize identically") {
  const CertReport a = hirota::certify_main_component(3, 17, CertMode::Modular);
  const CertReport b = hirota::certify_main_component(3, 17, CertMode::Modular);
  CHECK(hirota::report_to_json(a, false) == hirota::report_to_json(b, false));
}

TEST_CASE("type confusion inside a report is an input error") {
  const std::string bad = R"({
    "genus": 2, "seed": 1, "mode": "exact",
    "verdict": "yes"
  })";
  CHECK_THROWS_AS(hirota::report_from_json(bad), InputError);
  const std::string bad_timings = R"({
    "genus": 2, "seed": 1, "mode": "exact",
    "timings_ms": 3
  })";
  CHECK_THROWS_AS(hirota::report_from_json(bad_timings), InputError);
}

TEST_CASE("file helpers") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "hirota_io_test.json";
  const CertReport report = hirota::certify_main_component(2, 9, CertMode::Exact);
  hirota::write_report(report, path);
  const CertReport back = hirota::read_report(path);
  CHECK(back.jacobian_rank == report.jacobian_rank);
  CHECK(back.seed == report.seed);
  fs::remove(path);
  CHECK_THROWS_AS(hirota::read_report(path), InputError);
}

TEST_SUITE_END();
