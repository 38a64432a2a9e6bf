#include "fou.hpp"

#include <cmath>
#include <cstdio>

namespace fcir {

SamplePath integral_J(const SamplePath& fbm_path, double a) {
  if (a == 0.0) return fbm_path;
  const TimeGrid& grid = fbm_path.grid;
  const std::size_t n = grid.n_steps();
  const double half_step = 0.5 * grid.delta();
  std::vector<double> j(n + 1);
  double lebesgue = 0.0;
  double prev = fbm_path.values[0];  // e^{-a t_0} B_0
  j[0] = prev;
  for (std::size_t k = 1; k <= n; ++k) {
    const double discounted = std::exp(-a * grid.time(k)) * fbm_path.values[k];
    lebesgue += half_step * (prev + discounted);
    j[k] = discounted + a * lebesgue;
    prev = discounted;
  }
  return SamplePath(grid, std::move(j));
}

FouPath simulate_fou(const SamplePath& fbm_path, const ModelParams& params) {
  const SamplePath j = integral_J(fbm_path, params.a);
  const TimeGrid& grid = fbm_path.grid;
  std::vector<double> y(grid.size());
  for (std::size_t k = 0; k < y.size(); ++k)
    y[k] = std::exp(params.a * grid.time(k)) * (params.y0 + params.sigma * j.values[k]);
  return FouPath{grid, std::move(y), params};
}

HitResult first_zero(const TimeGrid& grid, std::span<const double> values) {
  require(values.size() == grid.size(), ErrorCode::GridMismatch,
          "path length does not match its grid");
  require(values[0] > 0.0, ErrorCode::NonpositiveStart,
          "zero detection needs a positive starting value");
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > 0.0) continue;
    const double t_prev = grid.time(k - 1);
    const double t_k = grid.time(k);
    double tau = t_k;
    if (values[k] != 0.0) {
      const double w = values[k - 1] / (values[k - 1] - values[k]);
      tau = std::min(t_k, t_prev + w * (t_k - t_prev));
    }
    return HitResult{true, tau, k};
  }
  return HitResult{};
}

HitResult first_zero(const FouPath& path) { return first_zero(path.grid, path.values); }

std::string to_json(const HitResult& hit) {
  if (!hit.hit) return R"({"hit": false, "tau": null, "index": null})";
  char buf[128];
  std::snprintf(buf, sizeof buf, R"({"hit": true, "tau": %.17g, "index": %zu})", *hit.tau,
                *hit.index);
  return buf;
}

}  // namespace fcir
