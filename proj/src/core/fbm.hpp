#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "random.hpp"
#include "types.hpp"

namespace fcir {

/// E[B_t B_s] = (t^{2H} + s^{2H} - |t - s|^{2H}) / 2.
double fbm_cov(double t, double s, HurstIndex hurst);

enum class Generator { Circulant, Cholesky };

const char* to_string(Generator g) noexcept;

/// Largest grid accepted by the Cholesky sampler (O(n^3) setup).
inline constexpr std::size_t kCholeskyMaxSteps = 4096;

/// Exact sampler factorizing the fBm covariance at the grid nodes t_1..t_n.
class CholeskyFbm {
 public:
  CholeskyFbm(TimeGrid grid, HurstIndex hurst);

  const TimeGrid& grid() const noexcept { return grid_; }
  SamplePath sample(GaussianStream& noise) const;

 private:
  TimeGrid grid_;
  HurstIndex hurst_;
  Eigen::MatrixXd lower_;
};

/// Circulant-embedding (Davies-Harte / Wood-Chan) sampler of fractional
/// Gaussian noise on the grid spacing, cumulated to fBm.
///
/// The embedding of size 2n is checked once at construction: eigenvalues in
/// [-1e-12 * max, 0) are clamped, anything more negative throws
/// EmbeddingNotNonnegative. `sample` is const and safe to call concurrently.
class CirculantFbm {
 public:
  CirculantFbm(TimeGrid grid, HurstIndex hurst);
  ~CirculantFbm();
  CirculantFbm(CirculantFbm&&) noexcept;
  CirculantFbm& operator=(CirculantFbm&&) noexcept;

  const TimeGrid& grid() const noexcept { return grid_; }
  SamplePath sample(GaussianStream& noise) const;

  /// sqrt(lambda_k / m) for k = 0..n.
  const std::vector<double>& spectral_scale() const noexcept { return scale_; }

 private:
  struct Plan;
  TimeGrid grid_;
  HurstIndex hurst_;
  std::vector<double> scale_;
  std::unique_ptr<Plan> plan_;
};

/// sqrt(lambda_k / m) from the circulant eigenvalues, clamping values in
/// [-1e-12 * max, 0) to zero; throws EmbeddingNotNonnegative below that.
std::vector<double> embedding_scale(std::span<const double> eigenvalues, std::size_t m);

/// Either sampler behind one interface.
class FbmSampler {
 public:
  FbmSampler(Generator kind, TimeGrid grid, HurstIndex hurst);
  ~FbmSampler();
  FbmSampler(FbmSampler&&) noexcept;
  FbmSampler& operator=(FbmSampler&&) noexcept;

  const TimeGrid& grid() const noexcept;
  SamplePath sample(GaussianStream& noise) const;

 private:
  std::unique_ptr<CholeskyFbm> cholesky_;
  std::unique_ptr<CirculantFbm> circulant_;
};

SamplePath cholesky_fbm(const TimeGrid& grid, HurstIndex hurst, Seed seed);
SamplePath circulant_fbm(const TimeGrid& grid, HurstIndex hurst, Seed seed);

}  // namespace fcir
