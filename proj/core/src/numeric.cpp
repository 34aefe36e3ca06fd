#include "hirota/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "hirota/errors.hpp"

namespace hirota {

namespace {

constexpr long double kSingularGuard = 1e-12L;

struct Mantissas {
  // Normalized sums: sum_k coeff_k weight_k exp(e_k - M) for the requested
  // derivative weights; M is the shared max exponent. Extended precision:
  // the residual stencils divide by h^4, so binary64 noise in p would drown
  // the h^2 truncation term the step-refinement contract promises.
  long double s = 0, sx = 0, sxx = 0;
  long double max_term = 0;
};

Mantissas scaled_tau_x(const EvalContext& ctx, long double x, long double y,
                       long double t) {
  long double max_e = -HUGE_VALL;
  for (const auto& term : ctx.terms()) {
    max_e = std::max(max_e, term.wx * x + term.wy * y + term.wt * t);
  }
  Mantissas m;
  for (const auto& term : ctx.terms()) {
    const long double e = term.wx * x + term.wy * y + term.wt * t - max_e;
    const long double v = term.coeff * std::exp(e);
    m.s += v;
    m.sx += v * term.wx;
    m.sxx += v * term.wx * term.wx;
    m.max_term = std::max(m.max_term, std::abs(v));
  }
  return m;
}

long double eval_p_impl(const EvalContext& ctx, long double x, long double y,
                        long double t) {
  const Mantissas m = scaled_tau_x(ctx, x, y, t);
  if (std::abs(m.s) <= kSingularGuard * std::max(1.0L, m.max_term)) {
    throw SingularPointError("tau vanishes at the evaluation point");
  }
  return 2.0L * (m.s * m.sxx - m.sx * m.sx) / (m.s * m.s);
}

}  // namespace

EvalContext::EvalContext(const NumericExpSum& sum, double fd_step)
    : fd_step_(fd_step) {
  if (sum.is_zero()) {
    throw InputError("cannot evaluate the zero exponential sum");
  }
  if (!(fd_step > 0)) throw InputError("finite difference step must be positive");
  terms_.reserve(sum.size());
  for (const auto& [key, coeff] : sum.terms()) {
    terms_.push_back(Term{key.x.to_double(), key.y.to_double(),
                          key.t.to_double(), coeff.to_double()});
  }
}

double eval_tau(const EvalContext& ctx, double x, double y, double t, int dx,
                int dy, int dt) {
  if (dx < 0 || dy < 0 || dt < 0 || dx > 2 || dy > 2 || dt > 2) {
    throw InputError("analytic derivative orders are limited to 2 per variable");
  }
  double acc = 0;
  for (const auto& term : ctx.terms()) {
    double v = term.coeff * std::exp(term.wx * x + term.wy * y + term.wt * t);
    for (int i = 0; i < dx; ++i) v *= term.wx;
    for (int i = 0; i < dy; ++i) v *= term.wy;
    for (int i = 0; i < dt; ++i) v *= term.wt;
    acc += v;
  }
  return acc;
}

double eval_p(const EvalContext& ctx, double x, double y, double t) {
  return static_cast<double>(eval_p_impl(ctx, x, y, t));
}

KpResidual kp_residual_detail(const EvalContext& ctx, double x, double y,
                              double t) {
  const long double h = ctx.fd_step();
  const auto p = [&](long double px, long double py, long double pt) {
    return eval_p_impl(ctx, px, py, pt);
  };

  const long double pc = p(x, y, t);
  const long double px1 = p(x + h, y, t);
  const long double px_1 = p(x - h, y, t);
  const long double px2 = p(x + 2 * h, y, t);
  const long double px_2 = p(x - 2 * h, y, t);

  const long double dpx = (px1 - px_1) / (2 * h);
  const long double dpxx = (px1 - 2 * pc + px_1) / (h * h);
  const long double dpxxxx =
      (px2 - 4 * px1 + 6 * pc - 4 * px_1 + px_2) / (h * h * h * h);
  const long double dpyy =
      (p(x, y + h, t) - 2 * pc + p(x, y - h, t)) / (h * h);
  const long double dptx = (p(x + h, y, t + h) - p(x + h, y, t - h) -
                            p(x - h, y, t + h) + p(x - h, y, t - h)) /
                           (4 * h * h);

  const long double terms[5] = {4 * dptx, -6 * dpx * dpx, -6 * pc * dpxx,
                                -dpxxxx, -3 * dpyy};
  long double residual = 0, scale = 0;
  for (long double v : terms) {
    residual += v;
    scale = std::max(scale, std::abs(v));
  }
  KpResidual out;
  out.p = static_cast<double>(pc);
  out.residual = static_cast<double>(residual);
  out.scale = static_cast<double>(scale);
  return out;
}

double kp_residual(const EvalContext& ctx, double x, double y, double t) {
  return std::abs(kp_residual_detail(ctx, x, y, t).residual);
}

std::vector<Rational> abel_eval(std::span<const Rational> kappa,
                                std::span<const Rational> ys) {
  if (kappa.size() < 2 || kappa.size() % 2 != 0) {
    throw InputError("abel evaluation needs an even number of kappa values");
  }
  const std::size_t g = kappa.size() / 2;
  if (ys.size() + 1 != g) {
    throw InputError("abel evaluation needs genus - 1 sample points");
  }
  std::vector<Rational> out;
  out.reserve(g);
  for (std::size_t j = 0; j < g; ++j) {
    Rational value(1);
    for (const Rational& y : ys) {
      const Rational den = Rational(1) - kappa[2 * j + 1] * y;
      if (den.is_zero()) {
        throw InputError("abel evaluation hits a pole");
      }
      value *= (Rational(1) - kappa[2 * j] * y) / den;
    }
    out.push_back(std::move(value));
  }
  return out;
}

}  // namespace hirota
