#pragma once

#include <vector>

#include "fou.hpp"

namespace fcir {

struct FcirPath {
  TimeGrid grid;
  std::vector<double> values;
  HitResult tau;
  ModelParams params;
};

enum class IntegralKind { Stratonovich, RiemannStieltjes };

const char* to_string(IntegralKind kind) noexcept;

struct ResidualReport {
  std::vector<std::size_t> n_steps;
  std::vector<double> mesh_sizes;     // strictly decreasing
  std::vector<double> max_residuals;  // sup_k |R(t_k)| per mesh
  std::vector<double> rates;          // log2(r_{j-1}/r_j); NaN for the first mesh
};

/// X_t = Y_t^2 1{t < tau}.
FcirPath simulate_fcir(const FouPath& fou_path);

/// sum_k (f_k + f_{k-1})/2 (g_k - g_{k-1}).
double stratonovich_sum(const SamplePath& f, const SamplePath& g);

/// sum_k f_{k-1} (g_k - g_{k-1}).
double rs_left_sum(const SamplePath& f, const SamplePath& g);

/// Pathwise residual of X_t = X_0 + a~ int X ds + sigma~ int sqrt(X) dB on a
/// dyadic ladder of meshes node-subsampled from `fbm_path`, coarsest first.
/// The ladder runs from `min_steps` up to fbm_path.grid.n_steps(); both must
/// be powers of two apart. Only the pre-hitting segment is used.
ResidualReport sde_residual(const SamplePath& fbm_path, const ModelParams& params,
                            IntegralKind kind, std::size_t min_steps = 256);

/// Residual R(t_k) at every node of one grid, computed up to `last` (inclusive).
std::vector<double> sde_residual_profile(const SamplePath& fbm_path, const ModelParams& params,
                                         IntegralKind kind, std::size_t& last);

}  // namespace fcir
