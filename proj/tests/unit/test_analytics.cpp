#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "analytics.hpp"
#include "fbm.hpp"

using namespace fcir;

namespace {

ModelParams params(double h, double a, double sigma = 1.0, double y0 = 0.0) {
  return {HurstIndex(h), a, sigma, y0};
}

// cov(J_t, J_s) straight from J_t = e^{-at} B_t + a int_0^t e^{-au} B_u du and
// the fBm covariance, integrated numerically. Independent of the closed forms.
double j_cov_by_parts(double t, double s, double a, double h) {
  const HurstIndex hurst(h);
  QuadSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-15;
  spec.max_subdivisions = 400;
  auto R = [&](double u, double v) { return fbm_cov(u, v, hurst); };
  // int_0^lim e^{-au} R(u, v) du, split at the kink u = v.
  auto inner = [&](double lim, double v) {
    auto f = [&](double u) { return std::exp(-a * u) * R(u, v); };
    if (v <= 0.0 || v >= lim) return quad(f, 0.0, lim, spec);
    return quad(f, 0.0, v, spec) + quad(f, v, lim, spec);
  };
  const double term1 = std::exp(-a * (t + s)) * R(t, s);
  const double term2 = a * std::exp(-a * t) * inner(s, t);
  const double term3 = a * std::exp(-a * s) * inner(t, s);
  const double term4 =
      a * a * quad([&](double v) { return std::exp(-a * v) * inner(t, v); }, 0.0, s, spec);
  return term1 + term2 + term3 + term4;
}

}  // namespace

TEST_CASE("gamma function values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  for (double x : {0.3, 0.7, 1.6}) CHECK(std::abs(gamma_fn(x + 1.0) / (x * gamma_fn(x)) - 1.0) < 1e-10);
  // Accuracy contract on [0.1, 10] against integer factorials and half-integers.
  CHECK(gamma_fn(10.0) == doctest::Approx(362880.0).epsilon(1e-12));
  CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_fn(0.0), Error);
  CHECK_THROWS_AS(gamma_fn(-1.5), Error);
}

TEST_CASE("ou_cov at H=1/2 reduces to the classical OU covariance") {
  const double want = -0.5 * (std::exp(-3.0) - std::exp(-1.0));
  CHECK(ou_cov(2.0, 1.0, params(0.5, -1.0)) == doctest::Approx(want).epsilon(1e-9));
  CHECK(want == doctest::Approx(0.1590).epsilon(1e-3));
}

TEST_CASE("ou_cov is symmetric and matches ou_var on the diagonal") {
  for (double h : {0.2, 0.5, 0.8})
    for (double a : {-1.0, 0.0, 0.7}) {
      const auto p = params(h, a, 1.3);
      CHECK(ou_cov(1.0, 2.0, p) == ou_cov(2.0, 1.0, p));
      const double v = ou_var(1.5, p);
      CHECK(std::abs(ou_cov(1.5, 1.5, p) - v) <= 2.0 * (1e-10 * std::abs(v) + 1e-14));
    }
}

TEST_CASE("ou_cov agrees with the integration-by-parts oracle") {
  for (double h : {0.15, 0.3, 0.5, 0.7, 0.9})
    for (double a : {-1.0, -0.1, 0.5, 1.0})
      for (auto [t, s] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.7, 1.9}}) {
        CAPTURE(h);
        CAPTURE(a);
        CAPTURE(t);
        CAPTURE(s);
        const double sigma = 0.8;
        const double oracle =
            sigma * sigma * std::exp(a * (t + s)) * j_cov_by_parts(t, s, a, h);
        const double got = ou_cov(t, s, params(h, a, sigma));
        CHECK(std::abs(got - oracle) <= 1e-8 * std::max(1.0, std::abs(oracle)));
      }
}

TEST_CASE("ou_var closed forms") {
  CHECK(ou_var(1.7, params(0.3, 0.0, 2.0)) == doctest::Approx(4.0 * std::pow(1.7, 0.6)));
  for (double a : {-1.0, 0.5}) {
    const double want = (std::exp(2.0 * a * 1.3) - 1.0) / (2.0 * a);
    CHECK(std::abs(ou_var(1.3, params(0.5, a)) - want) < 1e-9 * want);
  }
  CHECK(ou_var(0.0, params(0.7, 1.0)) == 0.0);
}

TEST_CASE("ou_cov is homogeneous in sigma^2") {
  for (double h : {0.3, 0.7})
    for (double a : {-1.0, 0.5}) {
      const double unit = ou_cov(1.2, 0.4, params(h, a, 1.0));
      CHECK(ou_cov(1.2, 0.4, params(h, a, 2.5)) == doctest::Approx(6.25 * unit).epsilon(1e-12));
    }
}

TEST_CASE("ou_cov with y0 = 0 equals sigma^2 e^{a(t+s)} j_cov") {
  const double sigma = 1.4, a = -0.6, s = 0.5, t = 1.8;
  for (double h : {0.3, 0.7}) {
    const double lhs = ou_cov(t, s, params(h, a, sigma));
    const double rhs = sigma * sigma * std::exp(a * (t + s)) * j_cov(s, t, a, HurstIndex(h));
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("j_cov special cases") {
  for (double h : {0.3, 0.6})
    CHECK(j_cov(1.0, 2.5, 0.0, HurstIndex(h)) == fbm_cov(1.0, 2.5, HurstIndex(h)));
  CHECK(j_cov(1.0, 1.0, 1.0, HurstIndex(0.5)) ==
        doctest::Approx(j_var(1.0, 1.0, HurstIndex(0.5))).epsilon(1e-10));
  // H = 1/2: Var int_0^1 e^{-u} dW = (1 - e^{-2}) / 2.
  CHECK(j_var(1.0, 1.0, HurstIndex(0.5)) ==
        doctest::Approx((1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-10));
  try {
    (void)j_cov(2.0, 1.0, 1.0, HurstIndex(0.5));
    FAIL("expected ArgOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArgOrder);
  }
}

TEST_CASE("j_var limits") {
  CHECK(j_var(2.0, 0.0, HurstIndex(0.35)) == std::pow(2.0, 0.7));
  CHECK(j_var(0.0, 1.0, HurstIndex(0.7)) == 0.0);
  const double limit = 0.7 * gamma_fn(1.4);
  CHECK(std::abs(j_var(30.0, 1.0, HurstIndex(0.7)) - limit) < 1e-6);
  CHECK(std::abs(v_limit(1.0, HurstIndex(0.7)) - limit) < 1e-15);
}

TEST_CASE("j_increment_var identities") {
  CHECK(j_increment_var(1.0, 1.0, 0.8, HurstIndex(0.4)) == 0.0);
  CHECK(j_increment_var(0.5, 2.0, 0.0, HurstIndex(0.4)) == doctest::Approx(std::pow(1.5, 0.8)));
  const HurstIndex h(0.7);
  const double lhs = j_increment_var(0.5, 1.5, 1.0, h);
  const double rhs = j_var(1.5, 1.0, h) + j_var(0.5, 1.0, h) - 2.0 * j_cov(0.5, 1.5, 1.0, h);
  CHECK(std::abs(lhs - rhs) < 1e-8);
}

TEST_CASE("v_limit values and scaling") {
  CHECK(v_limit(1.0, HurstIndex(0.5)) == doctest::Approx(0.5).epsilon(1e-15));
  for (double h : {0.2, 0.6, 0.9}) {
    CHECK(v_limit(1.0, HurstIndex(h)) == doctest::Approx(h * gamma_fn(2.0 * h)).epsilon(1e-15));
    CHECK(v_limit(2.6, HurstIndex(h)) ==
          doctest::Approx(v_limit(1.3, HurstIndex(h)) / std::pow(2.0, 2.0 * h)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(v_limit(0.0, HurstIndex(0.5)), Error);
}

TEST_CASE("vtsq_derivative against finite differences and closed forms") {
  const HurstIndex h(0.7);
  const double step = 1e-5;
  const double fd = (j_var(1.0 + step, 1.0, h) - j_var(1.0 - step, 1.0, h)) / (2.0 * step);
  CHECK(std::abs(vtsq_derivative(1.0, 1.0, h) - fd) < 1e-6);
  for (double t : {0.3, 1.0, 4.0})
    CHECK(vtsq_derivative(t, 0.8, HurstIndex(0.5)) ==
          doctest::Approx(std::exp(-1.6 * t)).epsilon(1e-9));
  CHECK(std::abs(vtsq_derivative(50.0, 1.0, h)) < 1e-10);
  CHECK_THROWS_AS(vtsq_derivative(0.0, 1.0, h), Error);
}

TEST_CASE("time-changed variance derivative") {
  // v_u^2 = V_{u/(1-u)}^2; compare with a central difference in u.
  const HurstIndex h(0.6);
  const double a = 0.9;
  auto v2 = [&](double u) { return j_var(u / (1.0 - u), a, h); };
  for (double u : {0.2, 0.5, 0.8}) {
    const double step = 1e-5;
    const double fd = (v2(u + step) - v2(u - step)) / (2.0 * step);
    CHECK(std::abs(time_changed_variance_derivative(u, a, h) - fd) < 1e-5);
  }
  // The maximum sup v_u^2 is attained in the limit u -> 1.
  CHECK(std::abs(v2(0.999) - v_limit(a, h)) < 1e-4);
}

TEST_CASE("sup-tail bound shape") {
  const BoundParams unit{};
  const double v2 = v_limit(1.0, HurstIndex(0.5));
  CHECK(sup_tail_bound(1.3, 1.0, HurstIndex(0.5), unit, TailVariant::Prop3) ==
        doctest::Approx(std::exp(-1.69 / (2.0 * v2))).epsilon(1e-15));
  const BoundParams doubled{2.0, 2.0};
  for (TailVariant v : {TailVariant::Prop2, TailVariant::Prop3})
    CHECK(sup_tail_bound(0.9, 0.5, HurstIndex(0.7), doubled, v) ==
          doctest::Approx(2.0 * sup_tail_bound(0.9, 0.5, HurstIndex(0.7), unit, v)).epsilon(1e-15));
  for (double x : {0.4, 2.0, 3.7})
    CHECK(sup_tail_bound(x, 0.5, HurstIndex(0.3), unit, TailVariant::Prop2) /
              sup_tail_bound(x, 0.5, HurstIndex(0.3), unit, TailVariant::Prop3) ==
          doctest::Approx(x).epsilon(1e-13));
  CHECK_THROWS_AS(BoundParams({0.0, 1.0}).validate(), Error);
}

TEST_CASE("tau_bound consistency") {
  const ModelParams p(HurstIndex(0.7), 1.0, 1.0, 2.0);
  const double via_tail = sup_tail_bound(2.0, 1.0, p.hurst, BoundParams{}, TailVariant::Prop3);
  CHECK(std::abs(tau_bound(p, BoundParams{}) / via_tail - 1.0) < 1e-12);
  double prev = tau_bound(ModelParams(HurstIndex(0.7), 1.0, 1.0, 3.0), {});
  for (double y0 : {4.0, 5.0}) {
    const double b = tau_bound(ModelParams(HurstIndex(0.7), 1.0, 1.0, y0), {});
    CHECK(b < prev);
    prev = b;
  }
  CHECK(tau_bound(ModelParams(HurstIndex(0.4), 0.6, 0.5, 1.5), {}) ==
        doctest::Approx(tau_bound(ModelParams(HurstIndex(0.4), 0.6, 1.5, 4.5), {})).epsilon(1e-14));
  CHECK_THROWS_AS(tau_bound(ModelParams(HurstIndex(0.4), -0.6, 0.5, 1.5), {}), Error);
}

TEST_CASE("asymptotic covariance error decays like e^{as}") {
  const ModelParams p(HurstIndex(0.7), -1.0, 1.0, 0.0);
  const double s_values[] = {4.0, 6.0, 8.0, 10.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double s : s_values) {
    const double y = std::log(std::abs(ou_cov(1.0 + s, 1.0, p) - ou_cov_asymptotic(1.0, s, p)));
    sx += s;
    sy += y;
    sxx += s * s;
    sxy += s * y;
  }
  const double slope = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
  CHECK(std::abs(slope + 1.0) < 0.15);
}

TEST_CASE("asymptotic covariance preconditions") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { (void)ou_cov_asymptotic(1.0, 5.0, ModelParams(HurstIndex(0.7), 0.5, 1.0, 0.0)); }) ==
        ErrorCode::DomainError);
  CHECK(code_of([] { (void)ou_cov_asymptotic(1.0, 5.0, ModelParams(HurstIndex(0.5), -1.0, 1.0, 0.0)); }) ==
        ErrorCode::HalfHurst);
  CHECK(code_of([] { (void)ou_cov_asymptotic(1.0, 0.5, ModelParams(HurstIndex(0.7), -1.0, 1.0, 0.0)); }) ==
        ErrorCode::DomainError);
}

TEST_CASE("covariance matrix on four times is positive semidefinite") {
  const double ts[] = {0.5, 1.0, 1.5, 2.0};
  for (double h : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double a : {-1.0, -0.1, 0.5, 1.0}) {
      Eigen::Matrix4d m;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = ou_cov(ts[i], ts[j], params(h, a));
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m);
      CHECK(es.eigenvalues().minCoeff() >= -1e-8);
    }
}

TEST_CASE("j_var is increasing for large t when H >= 1/2") {
  for (double a : {0.5, 1.0})
    for (double h : {0.5, 0.7, 0.9}) {
      double prev = j_var(1.0, a, HurstIndex(h));
      for (double t = 2.0; t <= 50.0; t += 1.0) {
        const double v = j_var(t, a, HurstIndex(h));
        CHECK(v >= prev - 1e-10);
        prev = v;
      }
    }
}

TEST_CASE("j_var overshoots its limit when H < 1/2") {
  // The derivative turns negative and V_t^2 decays to the limit from above.
  for (double a : {0.5, 1.0}) {
    const HurstIndex h(0.3);
    CHECK(vtsq_derivative(4.0, a, h) < 0.0);
    CHECK(j_var(4.0, a, h) > v_limit(a, h));
    CHECK(std::abs(j_var(40.0, a, h) - v_limit(a, h)) < 1e-8);
  }
}
