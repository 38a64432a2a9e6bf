#include "analytics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbm.hpp"

namespace fcir {
namespace {

// int_lo^hi z^{2H-1} exp(c z + shift) dz. Exponential factors outside the
// integral are folded into `shift` so large e^{+-a t} never overflow alone.
double kernel(double lo, double hi, double c, double shift, double hurst, const QuadSpec& spec) {
  if (lo >= hi) return 0.0;
  const double p = 2.0 * hurst - 1.0;
  auto f = [=](double z) { return std::pow(z, p) * std::exp(c * z + shift); };
  return quad(f, lo, hi, spec, lo == 0.0 ? p : 0.0);
}

void require_time(double t, const char* name) {
  require(std::isfinite(t) && t >= 0.0, ErrorCode::InvalidArgument,
          std::string(name) + " must be a finite non-negative time");
}

// int_0^inf e^{-w} (w + offset)^{q} dw, truncated where the integrand (which
// bounds the tail for q <= 0) drops below abs_tol.
double shifted_gamma_tail(double offset, double q, const QuadSpec& spec) {
  auto integrand = [=](double w) { return std::exp(-w) * std::pow(w + offset, q); };
  double upper = 1.0;
  while (integrand(upper) >= spec.abs_tol) upper *= 2.0;
  return quad(integrand, 0.0, upper, spec);
}

}  // namespace

void BoundParams::validate() const {
  require(C > 0.0 && C1 > 0.0, ErrorCode::InvalidArgument,
          "bound constants C and C1 must be positive");
}

double gamma_fn(double x) {
  require(std::isfinite(x) && x > 0.0, ErrorCode::DomainError,
          "gamma_fn requires x > 0, got " + std::to_string(x));
  return std::tgamma(x);
}

double ou_cov(double t, double s, const ModelParams& params, const QuadSpec& spec) {
  require_time(t, "t");
  require_time(s, "s");
  const double a = params.a;
  const double h = params.hurst.value();
  const double sigma2 = params.sigma * params.sigma;
  if (a == 0.0) return sigma2 * fbm_cov(t, s, params.hurst);

  const double hi = std::max(t, s);
  const double lo = std::min(t, s);
  const double d = hi - lo;
  const double sum = t + s;
  const double terms = -kernel(0.0, d, -a, a * d, h, spec)
                     + kernel(d, hi, a, -a * d, h, spec)
                     - kernel(lo, hi, -a, a * sum, h, spec)
                     + kernel(0.0, lo, a, a * d, h, spec)
                     + 2.0 * kernel(0.0, hi, -a, a * sum, h, spec);
  return 0.5 * h * sigma2 * terms;
}

double ou_var(double t, const ModelParams& params, const QuadSpec& spec) {
  require_time(t, "t");
  const double a = params.a;
  const double h = params.hurst.value();
  const double sigma2 = params.sigma * params.sigma;
  if (t == 0.0) return 0.0;
  if (a == 0.0) return sigma2 * std::pow(t, 2.0 * h);
  return h * sigma2 * (kernel(0.0, t, a, 0.0, h, spec) + kernel(0.0, t, -a, 2.0 * a * t, h, spec));
}

double j_cov(double s, double t, double a, HurstIndex hurst, const QuadSpec& spec) {
  require_time(t, "t");
  require_time(s, "s");
  require(s <= t, ErrorCode::ArgOrder, "j_cov requires s <= t");
  const double h = hurst.value();
  if (a == 0.0) return fbm_cov(s, t, hurst);
  const double d = t - s;
  return -0.5 * h * kernel(0.0, d, -a, -2.0 * a * s, h, spec)
         + 0.5 * h * kernel(d, t, a, -2.0 * a * t, h, spec)
         - 0.5 * h * kernel(s, t, -a, 0.0, h, spec)
         + 0.5 * h * kernel(0.0, s, a, -2.0 * a * s, h, spec)
         + h * kernel(0.0, t, -a, 0.0, h, spec);
}

double j_var(double t, double a, HurstIndex hurst, const QuadSpec& spec) {
  require_time(t, "t");
  const double h = hurst.value();
  if (t == 0.0) return 0.0;
  if (a == 0.0) return std::pow(t, 2.0 * h);
  return h * (kernel(0.0, t, a, -2.0 * a * t, h, spec) + kernel(0.0, t, -a, 0.0, h, spec));
}

double j_increment_var(double s, double t, double a, HurstIndex hurst, const QuadSpec& spec) {
  require_time(t, "t");
  require_time(s, "s");
  require(s <= t, ErrorCode::ArgOrder, "j_increment_var requires s <= t");
  const double h = hurst.value();
  const double d = t - s;
  if (d == 0.0) return 0.0;
  if (a == 0.0) return std::pow(d, 2.0 * h);
  return h * kernel(0.0, d, a, -2.0 * a * t, h, spec) +
         h * kernel(0.0, d, -a, -2.0 * a * s, h, spec);
}

double v_limit(double a, HurstIndex hurst) {
  require(a > 0.0, ErrorCode::DomainError, "v_limit requires a > 0");
  const double h = hurst.value();
  return h * gamma_fn(2.0 * h) / std::pow(a, 2.0 * h);
}

double vtsq_derivative(double t, double a, HurstIndex hurst, const QuadSpec& spec) {
  require(std::isfinite(t) && t > 0.0, ErrorCode::DomainError,
          "vtsq_derivative requires t > 0");
  require(a > 0.0, ErrorCode::DomainError, "vtsq_derivative requires a > 0");
  const double h = hurst.value();
  const double leading = std::pow(t, 2.0 * h - 1.0) * std::exp(-a * t);
  const double damped = a * kernel(0.0, t, a, -2.0 * a * t, h, spec);
  return 2.0 * h * (leading - damped);
}

double time_changed_variance_derivative(double u, double a, HurstIndex hurst,
                                        const QuadSpec& spec) {
  require(u > 0.0 && u < 1.0, ErrorCode::DomainError,
          "time-changed derivative requires u in (0, 1)");
  const double one_minus = 1.0 - u;
  return vtsq_derivative(u / one_minus, a, hurst, spec) / (one_minus * one_minus);
}

double sup_tail_bound(double x, double a, HurstIndex hurst, const BoundParams& bounds,
                      TailVariant variant) {
  require(std::isfinite(x) && x > 0.0, ErrorCode::DomainError, "sup_tail_bound requires x > 0");
  require(a > 0.0, ErrorCode::DomainError, "sup_tail_bound requires a > 0");
  bounds.validate();
  const double h = hurst.value();
  const double v2 = v_limit(a, hurst);
  const double gaussian = std::exp(-x * x / (2.0 * v2));
  if (variant == TailVariant::Prop2) return bounds.C * std::pow(x, 1.0 / h - 1.0) * gaussian;
  return bounds.C1 * std::pow(x, 1.0 / h - 2.0) * gaussian;
}

double tau_bound(const ModelParams& params, const BoundParams& bounds) {
  require(params.a > 0.0, ErrorCode::DomainError, "tau_bound requires a > 0");
  require(params.y0 > 0.0, ErrorCode::DomainError, "tau_bound requires y0 > 0");
  bounds.validate();
  const double h = params.hurst.value();
  const double ratio = params.y0 / params.sigma;
  const double exponent = std::pow(params.a, 2.0 * h) * params.y0 * params.y0 /
                          (params.sigma * params.sigma * gamma_fn(2.0 * h + 1.0));
  return bounds.C1 * std::pow(ratio, 1.0 / h - 2.0) * std::exp(-exponent);
}

double ou_cov_asymptotic(double t, double s, const ModelParams& params, const QuadSpec& spec) {
  require(params.a < 0.0, ErrorCode::DomainError, "asymptotic covariance requires a < 0");
  const double h = params.hurst.value();
  require(h != 0.5, ErrorCode::HalfHurst,
          "leading coefficient H(2H-1) vanishes at H = 1/2");
  require(std::isfinite(t) && t > 0.0, ErrorCode::DomainError, "t must be positive");
  const double b = -params.a;
  require(b * s > 1.0, ErrorCode::DomainError, "asymptotic form requires -a*s > 1");
  spec.validate();

  const double q = 2.0 * h - 2.0;
  const double lag = b * s;         // -as
  const double total = b * (t + s); // -a(t+s)
  auto rising = [&](double upper) {
    // e^{-upper} int_1^upper e^y y^q dy
    auto f = [=](double y) { return std::exp(y - upper) * std::pow(y, q); };
    return quad(f, 1.0, upper, spec);
  };
  const double t1 = rising(lag);
  const double t2 = shifted_gamma_tail(lag, q, spec);
  const double decay = std::exp(params.a * t);
  const double t3 = decay * shifted_gamma_tail(total, q, spec);
  const double t4 = decay * rising(total);
  const double coef =
      params.sigma * params.sigma * h * (2.0 * h - 1.0) / (2.0 * std::pow(b, 2.0 * h));
  return coef * (t1 + t2 - (t3 + t4));
}

}  // namespace fcir
