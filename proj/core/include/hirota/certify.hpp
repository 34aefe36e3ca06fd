#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hirota/generators.hpp"
#include "hirota/linalg.hpp"
#include "hirota/point.hpp"

namespace hirota {

enum class CertMode { Exact, Modular };

std::string_view to_string(CertMode mode);
CertMode cert_mode_from_string(std::string_view name);

// Tangency certificate at a generic parameterized point. Full Jacobian rank
// 2^g - 1 pins the tangent space of the variety along the parameterized
// family to dimension 3g + 1 affine (3g projective), the dimension of the
// family itself.
struct CertReport {
  int genus = 0;
  std::uint64_t seed = 0;
  CertMode mode = CertMode::Exact;
  std::vector<std::uint64_t> primes;  // modular mode
  bool generators_vanish = false;
  std::size_t jacobian_rank = 0;
  std::size_t expected_rank = 0;
  std::size_t tangent_dim_affine = 0;
  std::size_t main_component_dim_projective = 0;
  bool verdict = false;
  int attempts = 0;
  std::map<std::string, double> timings_ms;
};

// Jacobian of the generator set at p, rows in set order, columns in cube
// ring layout (a-block by vertex index, then u, v, w). Rows are assembled
// from the structural pairwise form, never from expanded polynomials.
RationalMatrix jacobian_at(const GeneratorSet& set, const HirotaPoint& p,
                           int threads = 1);

// Core check at one parameter draw: reduced-set generators vanish (deduped
// too for genus <= 6) and the reduced Jacobian has rank 2^g - 1.
CertReport certify_at(const MainParams& params, CertMode mode,
                      SeededRng& prime_rng, int threads = 1);

// Seeded wrapper: draws parameters, retries on degenerate draws (up to 5
// attempts). Exact mode needs genus <= 6; modular mode genus <= 9 and uses
// two independent random primes that must agree.
CertReport certify_main_component(int genus, std::uint64_t seed, CertMode mode,
                                  int threads = 1);

}  // namespace hirota
