#include "hirota/certify.hpp"

#include <chrono>

#include "hirota/errors.hpp"
#include "hirota/main_component.hpp"
#include "hirota/parallel.hpp"

namespace hirota {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void jacobian_row(const Generator& gen, const HirotaPoint& p,
                  RationalMatrix& out, std::size_t row) {
  const int g = p.genus;
  const std::size_t a_block = std::size_t{1} << g;
  const bool unique = gen.uniquely_attained();
  for (const AttainedPair& pair : gen.pairs()) {
    Rational du(0), dv(0), dw(0);
    for (int i = 0; i < g; ++i) {
      const int d = pair.delta[static_cast<std::size_t>(i)];
      if (d == 0) continue;
      const auto idx = static_cast<std::size_t>(i);
      if (d == 1) {
        du += p.u[idx];
        dv += p.v[idx];
        dw += p.w[idx];
      } else {
        du -= p.u[idx];
        dv -= p.v[idx];
        dw -= p.w[idx];
      }
    }
    const Rational du2 = du * du;
    const Rational quartic = du2 * du2 + Rational(3) * dv * dv - Rational(4) * du * dw;
    const Rational px = Rational(4) * du2 * du - Rational(4) * dw;
    const Rational py = Rational(6) * dv;
    const Rational pt = Rational(-4) * du;
    const Rational factor = unique ? Rational(1) : p.a[pair.lo] * p.a[pair.hi];
    if (!unique) {
      out.at(row, pair.lo) += quartic * p.a[pair.hi];
      out.at(row, pair.hi) += quartic * p.a[pair.lo];
    }
    for (int i = 0; i < g; ++i) {
      const int d = pair.delta[static_cast<std::size_t>(i)];
      if (d == 0) continue;
      const Rational sign(d);
      const auto ui = a_block + static_cast<std::size_t>(i);
      out.at(row, ui) += factor * px * sign;
      out.at(row, ui + static_cast<std::size_t>(g)) += factor * py * sign;
      out.at(row, ui + 2 * static_cast<std::size_t>(g)) += factor * pt * sign;
    }
  }
}

bool all_zero(const std::vector<Rational>& values) {
  for (const Rational& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(CertMode mode) {
  return mode == CertMode::Exact ? "exact" : "modular";
}

CertMode cert_mode_from_string(std::string_view name) {
  if (name == "exact") return CertMode::Exact;
  if (name == "modular") return CertMode::Modular;
  throw InputError("unknown certificate mode '" + std::string(name) +
                   "' (expected exact or modular)");
}

RationalMatrix jacobian_at(const GeneratorSet& set, const HirotaPoint& p,
                           int threads) {
  p.validate();
  if (p.genus != set.genus()) throw InputError("point genus mismatch");
  const std::size_t cols =
      (std::size_t{1} << p.genus) + 3 * static_cast<std::size_t>(p.genus);
  RationalMatrix out(set.size(), cols);
  const auto gens = set.generators();
  parallel_for(set.size(), threads, [&](std::size_t row) {
    jacobian_row(gens[row], p, out, row);
  });
  return out;
}

CertReport certify_at(const MainParams& params, CertMode mode,
                      SeededRng& prime_rng, int threads) {
  params.validate();
  const int g = params.genus();
  if (mode == CertMode::Exact && g > 6) {
    throw InputError("exact certification supports genus <= 6");
  }
  if (g > 9) throw InputError("certification supports genus <= 9");

  CertReport report;
  report.genus = g;
  report.mode = mode;
  report.expected_rank = (std::size_t{1} << g) - 1;

  const auto t_point = Clock::now();
  const HirotaPoint p = phi(params);
  report.timings_ms["parameterize"] = ms_since(t_point);

  const auto t_vanish = Clock::now();
  const GeneratorSet reduced = all_generators(g, GenMode::Reduced);
  report.generators_vanish = all_zero(evaluate_generators(reduced, p));
  if (report.generators_vanish && g <= 6) {
    const GeneratorSet deduped = all_generators(g, GenMode::Deduped);
    report.generators_vanish = all_zero(evaluate_generators(deduped, p));
  }
  report.timings_ms["vanish"] = ms_since(t_vanish);

  const auto t_jac = Clock::now();
  const RationalMatrix jac = jacobian_at(reduced, p, threads);
  report.timings_ms["jacobian"] = ms_since(t_jac);

  const auto t_rank = Clock::now();
  if (mode == CertMode::Exact) {
    report.jacobian_rank = rank_exact(jac);
  } else {
    // Two independent primes must agree; a prime hitting a denominator is
    // resampled.
    std::size_t ranks[2] = {0, 0};
    for (int trial = 0; trial < 2; ++trial) {
      while (true) {
        const std::uint64_t prime = random_prime(prime_rng);
        if (trial == 1 && !report.primes.empty() &&
            prime == report.primes.front()) {
          continue;
        }
        const auto rank = try_rank_mod_p(jac, prime);
        if (rank) {
          ranks[trial] = *rank;
          report.primes.push_back(prime);
          break;
        }
      }
    }
    if (ranks[0] != ranks[1]) {
      // Keep the smaller estimate; a modular rank never exceeds the exact
      // one, so disagreement means at least one unlucky prime.
      report.jacobian_rank = std::min(ranks[0], ranks[1]);
    } else {
      report.jacobian_rank = ranks[0];
    }
  }
  report.timings_ms["rank"] = ms_since(t_rank);

  const std::size_t ambient = (std::size_t{1} << g) + 3 * static_cast<std::size_t>(g);
  report.tangent_dim_affine = ambient - report.jacobian_rank;
  report.main_component_dim_projective = report.tangent_dim_affine - 1;
  report.verdict =
      report.generators_vanish && report.jacobian_rank == report.expected_rank;
  return report;
}

CertReport certify_main_component(int genus, std::uint64_t seed, CertMode mode,
                                  int threads) {
  if (genus < 1) throw InputError("genus out of range");
  if (mode == CertMode::Exact && genus > 6) {
    throw InputError("exact certification supports genus <= 6");
  }
  if (genus > 9) throw InputError("certification supports genus <= 9");

  SeededRng rng(seed);
  const auto t_total = Clock::now();
  CertReport report;
  constexpr int kMaxAttempts = 5;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    const MainParams params = sample_main_params(genus, rng);
    report = certify_at(params, mode, rng, threads);
    report.attempts = attempt;
    if (report.verdict) break;
  }
  report.seed = seed;
  report.timings_ms["total"] = ms_since(t_total);
  return report;
}

}  // namespace hirota
