#include "mc.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "fou.hpp"
#include "parallel.hpp"

namespace fcir {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint32_t path_substream(std::size_t path) {
  require(path <= UINT32_MAX, ErrorCode::InvalidArgument, "too many paths for one seed");
  return static_cast<std::uint32_t>(path);
}

std::size_t node_index(const TimeGrid& grid, double t) {
  require(t >= 0.0 && t <= grid.t_max() * (1.0 + 1e-12), ErrorCode::InvalidArgument,
          "time " + std::to_string(t) + " lies outside the simulated horizon");
  const double pos = t / grid.delta();
  const double idx = std::round(pos);
  require(std::abs(pos - idx) < 1e-9, ErrorCode::InvalidArgument,
          "time " + std::to_string(t) + " is not a grid node; adjust steps_per_unit");
  return static_cast<std::size_t>(idx);
}

}  // namespace

unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void McOptions::validate() const {
  require(n_paths >= 1, ErrorCode::InvalidArgument, "n_paths must be at least 1");
  require(steps_per_unit >= 1, ErrorCode::InvalidArgument, "steps_per_unit must be at least 1");
}

TimeGrid unit_spacing_grid(double horizon, std::size_t steps_per_unit) {
  require(std::isfinite(horizon) && horizon > 0.0, ErrorCode::InvalidArgument,
          "horizon T must be positive");
  const double exact = horizon * static_cast<double>(steps_per_unit);
  const auto n = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  return TimeGrid(static_cast<double>(n) / static_cast<double>(steps_per_unit), std::max<std::size_t>(n, 1));
}

McEstimate summarize(std::span<const double> samples, double elapsed) {
  McEstimate est;
  est.n_samples = samples.size();
  est.elapsed = elapsed;
  if (samples.empty()) return est;
  CompensatedSum sum;
  for (double x : samples) sum.add(x);
  const double n = static_cast<double>(samples.size());
  est.mean = sum.value() / n;
  if (samples.size() > 1) {
    CompensatedSum sq;
    for (double x : samples) sq.add((x - est.mean) * (x - est.mean));
    est.std_error = std::sqrt(sq.value() / (n - 1.0) / n);
  }
  return est;
}

HittingStudy hitting_study(const ModelParams& params, std::span<const double> horizons,
                           const McOptions& options, Seed seed) {
  options.validate();
  require(!horizons.empty(), ErrorCode::InvalidArgument, "at least one horizon is required");
  require(params.y0 > 0.0, ErrorCode::NonpositiveStart, "hitting study requires y0 > 0");
  double t_max = 0.0;
  for (double h : horizons) {
    require(std::isfinite(h) && h > 0.0, ErrorCode::InvalidArgument, "horizons must be positive");
    t_max = std::max(t_max, h);
  }
  const auto start = Clock::now();
  const TimeGrid grid = unit_spacing_grid(t_max, options.steps_per_unit);
  const FbmSampler sampler(options.generator, grid, params.hurst);

  // First hitting time per path, +inf when the path never reaches zero.
  std::vector<double> tau(options.n_paths);
  parallel_for(options.n_paths, options.threads, [&](std::size_t p) {
    GaussianStream noise(seed, path_substream(p));
    const FouPath fou = simulate_fou(sampler.sample(noise), params);
    const HitResult hit = first_zero(fou);
    tau[p] = hit.hit ? *hit.tau : std::numeric_limits<double>::infinity();
  });

  HittingStudy study{params, {horizons.begin(), horizons.end()}, {}, options.steps_per_unit};
  const double elapsed = seconds_since(start);
  std::vector<double> indicator(options.n_paths);
  for (double h : horizons) {
    for (std::size_t p = 0; p < tau.size(); ++p) indicator[p] = tau[p] <= h ? 1.0 : 0.0;
    study.estimates.push_back(summarize(indicator, elapsed));
  }
  return study;
}

McEstimate estimate_hitting_prob(const ModelParams& params, double horizon,
                                 const McOptions& options, Seed seed) {
  const double h[] = {horizon};
  return hitting_study(params, h, options, seed).estimates.front();
}

std::vector<McEstimate> estimate_tail(double a, HurstIndex hurst, std::span<const double> levels,
                                      double horizon, const McOptions& options, Seed seed,
                                      TailSide side, bool antithetic) {
  options.validate();
  require(!levels.empty(), ErrorCode::InvalidArgument, "at least one level is required");
  for (std::size_t i = 1; i < levels.size(); ++i)
    require(side == TailSide::Upper ? levels[i] > levels[i - 1] : levels[i] < levels[i - 1],
            ErrorCode::InvalidArgument,
            side == TailSide::Upper ? "levels must be increasing"
                                    : "lower-tail levels must be decreasing");
  const auto start = Clock::now();
  const TimeGrid grid = unit_spacing_grid(horizon, options.steps_per_unit);
  const FbmSampler sampler(options.generator, grid, hurst);

  std::vector<double> extreme(options.n_paths);
  parallel_for(options.n_paths, options.threads, [&](std::size_t p) {
    GaussianStream noise(seed, path_substream(p), antithetic);
    const SamplePath j = integral_J(sampler.sample(noise), a);
    double e = j.values[0];
    for (double v : j.values) e = side == TailSide::Upper ? std::max(e, v) : std::min(e, v);
    extreme[p] = e;
  });

  const double elapsed = seconds_since(start);
  std::vector<McEstimate> out;
  std::vector<double> indicator(options.n_paths);
  for (double x : levels) {
    for (std::size_t p = 0; p < extreme.size(); ++p)
      indicator[p] = (side == TailSide::Upper ? extreme[p] >= x : extreme[p] <= x) ? 1.0 : 0.0;
    out.push_back(summarize(indicator, elapsed));
  }
  return out;
}

std::vector<McEstimate> estimate_sup_tail(double a, HurstIndex hurst,
                                          std::span<const double> levels, double horizon,
                                          const McOptions& options, Seed seed) {
  return estimate_tail(a, hurst, levels, horizon, options, seed, TailSide::Upper, false);
}

std::vector<McEstimate> empirical_cov(CovProcess process, const ModelParams& params,
                                      std::span<const std::pair<double, double>> pairs,
                                      const McOptions& options, Seed seed) {
  options.validate();
  require(!pairs.empty(), ErrorCode::InvalidArgument, "at least one (s, t) pair is required");
  double t_max = 0.0;
  for (const auto& [s, t] : pairs) t_max = std::max({t_max, s, t});
  require(t_max > 0.0, ErrorCode::InvalidArgument, "pair times must not all be zero");

  const auto start = Clock::now();
  const TimeGrid grid = unit_spacing_grid(t_max, options.steps_per_unit);
  const FbmSampler sampler(options.generator, grid, params.hurst);
  std::vector<std::pair<std::size_t, std::size_t>> nodes;
  for (const auto& [s, t] : pairs) nodes.emplace_back(node_index(grid, s), node_index(grid, t));

  const std::size_t n_pairs = pairs.size();
  std::vector<double> products(options.n_paths * n_pairs);
  parallel_for(options.n_paths, options.threads, [&](std::size_t p) {
    GaussianStream noise(seed, path_substream(p));
    const SamplePath fbm = sampler.sample(noise);
    std::vector<double> centred;
    if (process == CovProcess::J) {
      centred = integral_J(fbm, params.a).values;
    } else {
      centred = simulate_fou(fbm, params).values;
      for (std::size_t k = 0; k < centred.size(); ++k)
        centred[k] -= params.y0 * std::exp(params.a * grid.time(k));
    }
    for (std::size_t i = 0; i < n_pairs; ++i)
      products[p * n_pairs + i] = centred[nodes[i].first] * centred[nodes[i].second];
  });

  const double elapsed = seconds_since(start);
  std::vector<McEstimate> out;
  std::vector<double> column(options.n_paths);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    for (std::size_t p = 0; p < options.n_paths; ++p) column[p] = products[p * n_pairs + i];
    out.push_back(summarize(column, elapsed));
  }
  return out;
}

}  // namespace fcir
