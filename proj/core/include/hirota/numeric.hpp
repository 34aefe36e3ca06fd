#pragma once

#include <span>
#include <vector>

#include "hirota/expsum.hpp"
#include "hirota/rational.hpp"

namespace hirota {

// Double-precision view of an exponential sum. Evaluation normalizes by the
// largest exponent at the probe point, so widely spread frequencies do not
// overflow; p = 2 (log tau)_xx only ever sees the normalized mantissa.
class EvalContext {
 public:
  struct Term {
    double wx, wy, wt, coeff;
  };

  explicit EvalContext(const NumericExpSum& sum, double fd_step = 1e-3);

  const std::vector<Term>& terms() const { return terms_; }
  double fd_step() const { return fd_step_; }

 private:
  std::vector<Term> terms_;
  double fd_step_;
};

// Derivative of tau of order (dx, dy, dt), each order at most 2, evaluated
// analytically termwise. The common factor exp(M) of the exponent
// normalization is NOT removed here; eval_tau returns the true value and can
// overflow for extreme arguments, use eval_p for scale-free work.
double eval_tau(const EvalContext& ctx, double x, double y, double t,
                int dx = 0, int dy = 0, int dt = 0);

// p = 2 (log tau)_xx = 2 (tau tau_xx - tau_x^2) / tau^2, computed on
// normalized mantissas so the exponential scale cancels exactly. Throws
// SingularPointError when the normalized tau is numerically zero.
double eval_p(const EvalContext& ctx, double x, double y, double t);

struct KpResidual {
  double p = 0;
  double residual = 0;  // signed value of 4p_tx - 6p_x^2 - 6p p_xx - p_xxxx - 3p_yy
  double scale = 0;     // max |term| among the five
};

// KP equation residual with central differences of step ctx.fd_step():
// second-order stencils for p_x, p_xx, p_yy, p_tx and the 5-point stencil
// for p_xxxx.
KpResidual kp_residual_detail(const EvalContext& ctx, double x, double y,
                              double t);
double kp_residual(const EvalContext& ctx, double x, double y, double t);

// Degenerate abelian integral factors: component j is
//   prod_i (1 - kappa_{2j-1} y_i) / (1 - kappa_{2j} y_i)
// over the g-1 evaluation points y_i (1-based pairs). Poles are input
// errors.
std::vector<Rational> abel_eval(std::span<const Rational> kappa,
                                std::span<const Rational> ys);

}  // namespace hirota
