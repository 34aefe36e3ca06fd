#include "hirota/rng.hpp"

#include <algorithm>

#include "hirota/errors.hpp"

namespace hirota {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t SeededRng::next() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("SeededRng::below with bound 0");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::int64_t SeededRng::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("SeededRng::int_in with lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   below(span));
}

double SeededRng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Rational random_rational(SeededRng& rng) {
  const long num = static_cast<long>(rng.int_in(-50, 50));
  const long den = static_cast<long>(rng.int_in(1, 10));
  return Rational(num, den);
}

Rational random_nonzero_rational(SeededRng& rng) {
  Rational r = random_rational(rng);
  while (r.is_zero()) r = random_rational(rng);
  return r;
}

std::vector<Rational> random_distinct_rationals(SeededRng& rng, int count) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    Rational r = random_rational(rng);
    if (std::find(out.begin(), out.end(), r) == out.end()) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace hirota
