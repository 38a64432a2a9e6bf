#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fbm.hpp"
#include "params.hpp"

namespace fcir {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  double elapsed = 0.0;  // seconds
};

struct McOptions {
  std::size_t n_paths = 20000;
  std::size_t steps_per_unit = 256;
  Generator generator = Generator::Circulant;
  unsigned threads = 1;

  void validate() const;
};

struct HittingStudy {
  ModelParams params;
  std::vector<double> horizons;
  std::vector<McEstimate> estimates;  // P(tau <= T) per horizon
  std::size_t grid_steps;             // steps per unit time
};

enum class TailSide { Upper, Lower };
enum class CovProcess { Fou, J };

/// Grid of [0, T] with spacing 1/steps_per_unit (T rounded up to a node).
TimeGrid unit_spacing_grid(double horizon, std::size_t steps_per_unit);

/// Mean and standard error of per-path samples, summed in index order.
McEstimate summarize(std::span<const double> samples, double elapsed = 0.0);

/// P(tau <= T) for every horizon, all read off the same simulated paths on
/// [0, max T], so the estimates are exactly non-decreasing in T.
HittingStudy hitting_study(const ModelParams& params, std::span<const double> horizons,
                           const McOptions& options, Seed seed);

McEstimate estimate_hitting_prob(const ModelParams& params, double horizon,
                                 const McOptions& options, Seed seed);

/// Upper: P(max_{[0,T]} J >= x). Lower: P(min_{[0,T]} J <= x). With
/// `antithetic` every Gaussian draw is negated.
std::vector<McEstimate> estimate_tail(double a, HurstIndex hurst, std::span<const double> levels,
                                      double horizon, const McOptions& options, Seed seed,
                                      TailSide side, bool antithetic = false);

std::vector<McEstimate> estimate_sup_tail(double a, HurstIndex hurst,
                                          std::span<const double> levels, double horizon,
                                          const McOptions& options, Seed seed);

/// Sample covariance at each (s, t) pair, centred by the known mean (0 for J,
/// y0 e^{at} for the fOU process). Pair times must be grid nodes.
std::vector<McEstimate> empirical_cov(CovProcess process, const ModelParams& params,
                                      std::span<const std::pair<double, double>> pairs,
                                      const McOptions& options, Seed seed);

}  // namespace fcir
