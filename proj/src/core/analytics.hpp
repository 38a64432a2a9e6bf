#pragma once

#include "params.hpp"
#include "quadrature.hpp"

namespace fcir {

/// Unknown constants of the sup-tail inequalities; supplied by the caller.
struct BoundParams {
  double C = 1.0;
  double C1 = 1.0;

  void validate() const;
};

enum class TailVariant { Prop2, Prop3 };

double gamma_fn(double x);

/// Covariance of Y_t - y0 e^{at} and Y_s - y0 e^{as} for any t, s >= 0.
double ou_cov(double t, double s, const ModelParams& params, const QuadSpec& spec = {});

/// Var Y_t = H sigma^2 int_0^t z^{2H-1} (e^{az} + e^{2at - az}) dz.
double ou_var(double t, const ModelParams& params, const QuadSpec& spec = {});

/// cov(J_s, J_t) for s <= t, where J_t = int_0^t e^{-au} dB^H_u.
double j_cov(double s, double t, double a, HurstIndex hurst, const QuadSpec& spec = {});

/// V_t^2 = Var J_t.
double j_var(double t, double a, HurstIndex hurst, const QuadSpec& spec = {});

/// E (J_t - J_s)^2 for s <= t.
double j_increment_var(double s, double t, double a, HurstIndex hurst,
                       const QuadSpec& spec = {});

/// lim_{t->inf} V_t^2 = H Gamma(2H) / a^{2H}, a > 0. Also sup_t V_t^2.
double v_limit(double a, HurstIndex hurst);

/// d/dt V_t^2 for t > 0, a > 0.
double vtsq_derivative(double t, double a, HurstIndex hurst, const QuadSpec& spec = {});

/// d/du v_u^2 of the time-changed process Z_u = J_{u/(1-u)}, u in (0, 1).
double time_changed_variance_derivative(double u, double a, HurstIndex hurst,
                                        const QuadSpec& spec = {});

/// C x^{1/H-1} exp(-x^2/(2v^2)) (Prop2) or C1 x^{1/H-2} exp(-x^2/(2v^2))
/// (Prop3), with v^2 = v_limit(a, H).
double sup_tail_bound(double x, double a, HurstIndex hurst, const BoundParams& bounds,
                      TailVariant variant);

/// C1 (y0/sigma)^{1/H-2} exp(-a^{2H} y0^2 / (sigma^2 Gamma(2H+1))), bounding
/// P(tau < inf) for a > 0, y0 > 0.
double tau_bound(const ModelParams& params, const BoundParams& bounds);

/// Leading term of ou_cov(t + s, t) as s -> inf for a < 0, H != 1/2; the
/// remainder is O(e^{as}). Requires -a s > 1.
double ou_cov_asymptotic(double t, double s, const ModelParams& params,
                         const QuadSpec& spec = {});

}  // namespace fcir
