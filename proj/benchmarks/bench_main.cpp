#include <benchmark/benchmark.h>

#include <cstdint>

#include "hirota/certify.hpp"
#include "hirota/expsum.hpp"
#include "hirota/generators.hpp"
#include "hirota/linalg.hpp"
#include "hirota/main_component.hpp"
#include "hirota/numeric.hpp"
#include "hirota/rng.hpp"
#include "hirota/soliton.hpp"

namespace {

using hirota::GenMode;
using hirota::GeneratorSet;
using hirota::HirotaPoint;
using hirota::MainParams;
using hirota::NumericExpSum;
using hirota::SeededRng;

void bm_generators(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hirota::all_generators(g, GenMode::Reduced));
  }
}
BENCHMARK(bm_generators)->Arg(3)->Arg(5)->Arg(7);

void bm_evaluate_generators(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  SeededRng rng(1);
  const GeneratorSet set = hirota::all_generators(g, GenMode::Reduced);
  const HirotaPoint p = hirota::phi(hirota::sample_main_params(g, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hirota::evaluate_generators(set, p));
  }
}
BENCHMARK(bm_evaluate_generators)->Arg(3)->Arg(5)->Arg(7);

void bm_phi(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  SeededRng rng(2);
  const MainParams params = hirota::sample_main_params(g, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hirota::phi(params));
  }
}
BENCHMARK(bm_phi)->Arg(3)->Arg(6)->Arg(9);

NumericExpSum random_sum(int terms, SeededRng& rng) {
  NumericExpSum s;
  for (int i = 0; i < terms; ++i) {
    s.add_term(hirota::FreqTriple{hirota::random_rational(rng),
                                  hirota::random_rational(rng),
                                  hirota::random_rational(rng)},
               hirota::random_nonzero_rational(rng));
  }
  return s;
}

void bm_hirota_form(benchmark::State& state) {
  SeededRng rng(3);
  const NumericExpSum s = random_sum(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hirota::hirota_form(s));
  }
}
BENCHMARK(bm_hirota_form)->Arg(8)->Arg(32);

void bm_hirota_form_pairwise(benchmark::State& state) {
  SeededRng rng(3);
  const NumericExpSum s = random_sum(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hirota::hirota_form_pairwise(s));
  }
}
BENCHMARK(bm_hirota_form_pairwise)->Arg(8)->Arg(32);

void bm_jacobian_rank_exact(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hirota::certify_main_component(g, 42, hirota::CertMode::Exact));
  }
}
BENCHMARK(bm_jacobian_rank_exact)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_jacobian_rank_modular(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hirota::certify_main_component(g, 42, hirota::CertMode::Modular));
  }
}
BENCHMARK(bm_jacobian_rank_modular)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void bm_kp_residual(benchmark::State& state) {
  SeededRng rng(4);
  hirota::SolitonData data;
  data.k = 3;
  data.n = 6;
  data.kappa = hirota::random_distinct_rationals(rng, 6);
  data.pluecker =
      hirota::pluecker_minors(hirota::random_positive_matrix(3, 6, rng));
  const hirota::EvalContext ctx(hirota::soliton_tau(data), 1e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hirota::kp_residual(ctx, 0.1, -0.2, 0.3));
  }
}
BENCHMARK(bm_kp_residual);

}  // namespace

BENCHMARK_MAIN();
