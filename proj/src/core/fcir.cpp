#include "fcir.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fcir {
namespace {

void require_same_grid(const SamplePath& f, const SamplePath& g) {
  require(f.grid == g.grid, ErrorCode::GridMismatch, "integrand and integrator grids differ");
}

}  // namespace

const char* to_string(IntegralKind kind) noexcept {
  return kind == IntegralKind::Stratonovich ? "stratonovich" : "riemann_stieltjes";
}

FcirPath simulate_fcir(const FouPath& fou_path) {
  HitResult hit = first_zero(fou_path);
  std::vector<double> x(fou_path.values.size(), 0.0);
  const std::size_t stop = hit.hit ? *hit.index : x.size();
  for (std::size_t k = 0; k < stop; ++k) x[k] = fou_path.values[k] * fou_path.values[k];
  return FcirPath{fou_path.grid, std::move(x), hit, fou_path.params};
}

double stratonovich_sum(const SamplePath& f, const SamplePath& g) {
  require_same_grid(f, g);
  double sum = 0.0;
  for (std::size_t k = 1; k < f.values.size(); ++k)
    sum += 0.5 * (f.values[k] + f.values[k - 1]) * (g.values[k] - g.values[k - 1]);
  return sum;
}

double rs_left_sum(const SamplePath& f, const SamplePath& g) {
  require_same_grid(f, g);
  double sum = 0.0;
  for (std::size_t k = 1; k < f.values.size(); ++k)
    sum += f.values[k - 1] * (g.values[k] - g.values[k - 1]);
  return sum;
}

std::vector<double> sde_residual_profile(const SamplePath& fbm_path, const ModelParams& params,
                                         IntegralKind kind, std::size_t& last) {
  const FouPath fou = simulate_fou(fbm_path, params);
  const HitResult hit = first_zero(fou);
  const std::size_t n = fbm_path.grid.n_steps();
  // Stop one step short of the last node before tau (sqrt kink at tau).
  last = n;
  if (hit.hit) last = *hit.index >= 2 ? *hit.index - 2 : 0;

  const double dt = fbm_path.grid.delta();
  const double x0 = fou.values[0] * fou.values[0];
  std::vector<double> residual(last + 1, 0.0);
  double lebesgue = 0.0;
  double stochastic = 0.0;
  for (std::size_t k = 1; k <= last; ++k) {
    const double y_prev = fou.values[k - 1];
    const double y_k = fou.values[k];
    const double x_k = y_k * y_k;
    lebesgue += 0.5 * dt * (y_prev * y_prev + x_k);
    const double db = fbm_path.values[k] - fbm_path.values[k - 1];
    // sqrt(X) = |Y| before tau.
    const double root = kind == IntegralKind::Stratonovich
                            ? 0.5 * (std::abs(y_k) + std::abs(y_prev))
                            : std::abs(y_prev);
    stochastic += root * db;
    residual[k] = x_k - x0 - params.a_tilde() * lebesgue - params.sigma_tilde() * stochastic;
  }
  return residual;
}

ResidualReport sde_residual(const SamplePath& fbm_path, const ModelParams& params,
                            IntegralKind kind, std::size_t min_steps) {
  if (kind == IntegralKind::RiemannStieltjes)
    require(params.hurst.value() > 2.0 / 3.0, ErrorCode::HurstTooSmall,
            "Riemann-Stieltjes sums converge only for H > 2/3, got H = " +
                std::to_string(params.hurst.value()));
  const std::size_t finest = fbm_path.grid.n_steps();
  require(min_steps >= 1 && min_steps <= finest && finest % min_steps == 0 &&
              ((finest / min_steps) & (finest / min_steps - 1)) == 0,
          ErrorCode::InvalidArgument,
          "residual ladder needs min_steps dividing the finest grid by a power of two");

  ResidualReport report;
  for (std::size_t n = min_steps; n <= finest; n *= 2) {
    const SamplePath coarse = fbm_path.restrict_to(finest / n);
    std::size_t last = 0;
    const std::vector<double> r = sde_residual_profile(coarse, params, kind, last);
    double sup = 0.0;
    for (double v : r) sup = std::max(sup, std::abs(v));
    report.n_steps.push_back(n);
    report.mesh_sizes.push_back(coarse.grid.delta());
    report.rates.push_back(report.max_residuals.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : std::log2(report.max_residuals.back() / sup));
    report.max_residuals.push_back(sup);
  }
  return report;
}

}  // namespace fcir
