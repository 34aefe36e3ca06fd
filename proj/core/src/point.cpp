#include "hirota/point.hpp"

#include "hirota/cube.hpp"
#include "hirota/errors.hpp"

namespace hirota {

void HirotaPoint::validate() const {
  if (genus < 1 || genus > kMaxGenus) {
    throw InputError("point genus out of range");
  }
  if (a.size() != (std::size_t{1} << genus)) {
    throw InputError("point needs 2^genus theta coefficients");
  }
  const auto g = static_cast<std::size_t>(genus);
  if (u.size() != g || v.size() != g || w.size() != g) {
    throw InputError("point needs genus entries in each of u, v, w");
  }
}

void MainParams::validate() const {
  const int g = genus();
  if (g < 1 || g > kMaxGenus) {
    throw InputError("parameter genus out of range");
  }
  if (kappa.size() != 2 * static_cast<std::size_t>(g)) {
    throw InputError("parameters need 2*genus kappa values");
  }
  for (const Rational& l : lambda) {
    if (l.is_zero()) throw InputError("lambda values must be nonzero");
  }
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    for (std::size_t j = i + 1; j < kappa.size(); ++j) {
      if (kappa[i] == kappa[j]) {
        throw InputError("kappa values must be pairwise distinct");
      }
    }
  }
}

const Rational& SymmetricParams::q_at(int i, int j) const {
  const int g = genus();
  if (i == j || i < 0 || j < 0 || i >= g || j >= g) {
    throw InputError("q index out of range");
  }
  if (i > j) std::swap(i, j);
  // Row-major upper triangle offset: entries before row i plus the column.
  const int offset = i * (2 * g - i - 1) / 2 + (j - i - 1);
  return q[static_cast<std::size_t>(offset)];
}

void SymmetricParams::validate() const {
  const int g = genus();
  if (g < 1 || g > kMaxGenus) {
    throw InputError("parameter genus out of range");
  }
  if (q.size() != static_cast<std::size_t>(g * (g - 1) / 2)) {
    throw InputError("q needs g*(g-1)/2 upper-triangle entries");
  }
  for (const Rational& x : s) {
    if (x.is_zero()) throw InputError("s values must be nonzero");
  }
  for (const Rational& x : q) {
    if (x.is_zero()) throw InputError("q values must be nonzero");
  }
}

std::vector<Rational> point_assignment(const HirotaPoint& p) {
  p.validate();
  std::vector<Rational> values;
  values.reserve(p.a.size() + 3 * p.u.size());
  values.insert(values.end(), p.a.begin(), p.a.end());
  values.insert(values.end(), p.u.begin(), p.u.end());
  values.insert(values.end(), p.v.begin(), p.v.end());
  values.insert(values.end(), p.w.begin(), p.w.end());
  return values;
}

}  // namespace hirota
