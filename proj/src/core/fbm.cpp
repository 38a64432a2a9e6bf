#include "fbm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <string>

#include <Eigen/Cholesky>
#include <fftw3.h>

namespace fcir {
namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// Autocovariance of unit-spacing fractional Gaussian noise at lag k.
double fgn_autocov(std::size_t k, double hurst) {
  const double two_h = 2.0 * hurst;
  const double kd = static_cast<double>(k);
  return 0.5 * (std::pow(kd + 1.0, two_h) - 2.0 * std::pow(kd, two_h) +
                std::pow(std::abs(kd - 1.0), two_h));
}

}  // namespace

double fbm_cov(double t, double s, HurstIndex hurst) {
  const double two_h = 2.0 * hurst.value();
  if (t == s) return std::pow(t, two_h);
  return 0.5 * (std::pow(t, two_h) + std::pow(s, two_h) - std::pow(std::abs(t - s), two_h));
}

const char* to_string(Generator g) noexcept {
  return g == Generator::Cholesky ? "cholesky" : "circulant";
}

// ---------------------------------------------------------------------------
// Cholesky

CholeskyFbm::CholeskyFbm(TimeGrid grid, HurstIndex hurst) : grid_(grid), hurst_(hurst) {
  const std::size_t n = grid.n_steps();
  require(n <= kCholeskyMaxSteps, ErrorCode::InvalidArgument,
          "cholesky generator supports at most " + std::to_string(kCholeskyMaxSteps) +
              " steps; use the circulant generator");
  Eigen::MatrixXd gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = grid.time(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      const double c = fbm_cov(ti, grid.time(j + 1), hurst);
      gram(i, j) = c;
      gram(j, i) = c;
    }
  }
  const double max_diag = gram.diagonal().maxCoeff();
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success)
    fail(ErrorCode::CovarianceNotPD, "fBm Gram matrix factorization failed");
  lower_ = llt.matrixL();
  const double pivot_tol = 1e-13 * max_diag;
  for (std::size_t i = 0; i < n; ++i) {
    const double pivot = lower_(i, i) * lower_(i, i);
    if (!(pivot > pivot_tol))
      fail(ErrorCode::CovarianceNotPD,
           "pivot " + std::to_string(pivot) + " at node " + std::to_string(i + 1) +
               " is below tolerance");
  }
}

SamplePath CholeskyFbm::sample(GaussianStream& noise) const {
  const std::size_t n = grid_.n_steps();
  Eigen::VectorXd z(n);
  noise.fill(std::span<double>(z.data(), n));
  std::vector<double> values(n + 1, 0.0);
  // Lower-triangular product row by row; fixed summation order.
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) acc += lower_(i, j) * z[j];
    values[i + 1] = acc;
  }
  return SamplePath(grid_, std::move(values));
}

// ---------------------------------------------------------------------------
// Circulant embedding

std::vector<double> embedding_scale(std::span<const double> eigenvalues, std::size_t m) {
  double max_eig = 0.0;
  for (double l : eigenvalues) max_eig = std::max(max_eig, l);
  const double eig_tol = 1e-12 * max_eig;
  std::vector<double> scale(eigenvalues.size());
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    double lambda = eigenvalues[k];
    if (lambda < 0.0) {
      if (lambda < -eig_tol)
        fail(ErrorCode::EmbeddingNotNonnegative,
             "circulant eigenvalue " + std::to_string(lambda) + " at index " +
                 std::to_string(k) + " is below -1e-12 * max eigenvalue");
      lambda = 0.0;
    }
    scale[k] = std::sqrt(lambda / static_cast<double>(m));
  }
  return scale;
}

struct CirculantFbm::Plan {
  fftw_plan c2r = nullptr;
  ~Plan() {
    if (c2r) {
      std::lock_guard lock(fftw_planner_mutex());
      fftw_destroy_plan(c2r);
    }
  }
};

CirculantFbm::CirculantFbm(TimeGrid grid, HurstIndex hurst)
    : grid_(grid), hurst_(hurst), plan_(std::make_unique<Plan>()) {
  const std::size_t n = grid.n_steps();
  const std::size_t m = 2 * n;
  const double var_scale = std::pow(grid.delta(), 2.0 * hurst.value());

  std::vector<double> row(m);
  for (std::size_t k = 0; k <= n; ++k) row[k] = var_scale * fgn_autocov(k, hurst);
  for (std::size_t k = 1; k < n; ++k) row[m - k] = row[k];

  std::vector<std::complex<double>> spectrum(n + 1);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_plan r2c = fftw_plan_dft_r2c_1d(static_cast<int>(m), row.data(),
                                         reinterpret_cast<fftw_complex*>(spectrum.data()),
                                         FFTW_ESTIMATE);
    fftw_execute(r2c);
    fftw_destroy_plan(r2c);

    std::vector<std::complex<double>> in(n + 1);
    std::vector<double> out(m);
    plan_->c2r = fftw_plan_dft_c2r_1d(static_cast<int>(m),
                                      reinterpret_cast<fftw_complex*>(in.data()), out.data(),
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  require(plan_->c2r != nullptr, ErrorCode::InvalidArgument, "FFTW planning failed");

  std::vector<double> eigenvalues(n + 1);
  for (std::size_t k = 0; k <= n; ++k) eigenvalues[k] = spectrum[k].real();
  scale_ = embedding_scale(eigenvalues, m);
}

CirculantFbm::~CirculantFbm() = default;
CirculantFbm::CirculantFbm(CirculantFbm&&) noexcept = default;
CirculantFbm& CirculantFbm::operator=(CirculantFbm&&) noexcept = default;

SamplePath CirculantFbm::sample(GaussianStream& noise) const {
  const std::size_t n = grid_.n_steps();
  const std::size_t m = 2 * n;
  // Hermitian half-spectrum; c2r of it is real with covariance = circulant row.
  std::vector<std::complex<double>> half(n + 1);
  half[0] = {scale_[0] * noise.next(), 0.0};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double re = noise.next();
    const double im = noise.next();
    half[k] = {scale_[k] * inv_sqrt2 * re, scale_[k] * inv_sqrt2 * im};
  }
  half[n] = {scale_[n] * noise.next(), 0.0};

  std::vector<double> fgn(m);
  fftw_execute_dft_c2r(plan_->c2r, reinterpret_cast<fftw_complex*>(half.data()), fgn.data());

  std::vector<double> values(n + 1);
  values[0] = 0.0;
  for (std::size_t k = 0; k < n; ++k) values[k + 1] = values[k] + fgn[k];
  return SamplePath(grid_, std::move(values));
}

// ---------------------------------------------------------------------------

FbmSampler::FbmSampler(Generator kind, TimeGrid grid, HurstIndex hurst) {
  if (kind == Generator::Cholesky)
    cholesky_ = std::make_unique<CholeskyFbm>(grid, hurst);
  else
    circulant_ = std::make_unique<CirculantFbm>(grid, hurst);
}

FbmSampler::~FbmSampler() = default;
FbmSampler::FbmSampler(FbmSampler&&) noexcept = default;
FbmSampler& FbmSampler::operator=(FbmSampler&&) noexcept = default;

const TimeGrid& FbmSampler::grid() const noexcept {
  return cholesky_ ? cholesky_->grid() : circulant_->grid();
}

SamplePath FbmSampler::sample(GaussianStream& noise) const {
  return cholesky_ ? cholesky_->sample(noise) : circulant_->sample(noise);
}

SamplePath cholesky_fbm(const TimeGrid& grid, HurstIndex hurst, Seed seed) {
  GaussianStream noise(seed);
  return CholeskyFbm(grid, hurst).sample(noise);
}

SamplePath circulant_fbm(const TimeGrid& grid, HurstIndex hurst, Seed seed) {
  GaussianStream noise(seed);
  return CirculantFbm(grid, hurst).sample(noise);
}

}  // namespace fcir
