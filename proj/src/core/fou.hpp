#pragma once

#include <optional>
#include <span>
#include <string>

#include "params.hpp"
#include "types.hpp"

namespace fcir {

struct FouPath {
  TimeGrid grid;
  std::vector<double> values;
  ModelParams params;
};

struct HitResult {
  bool hit = false;
  std::optional<double> tau;
  std::optional<std::size_t> index;
};

/// J_t = e^{-at} B_t + a int_0^t e^{-as} B_s ds, Lebesgue part by the
/// trapezoid rule on the path's grid. J_0 = 0.
SamplePath integral_J(const SamplePath& fbm_path, double a);

/// Y_t = e^{at} (y0 + sigma J_t) at every node.
FouPath simulate_fou(const SamplePath& fbm_path, const ModelParams& params);

/// First node k with values[k] <= 0; tau interpolated linearly on
/// [t_{k-1}, t_k]. Throws NonpositiveStart if values[0] <= 0.
HitResult first_zero(const TimeGrid& grid, std::span<const double> values);
HitResult first_zero(const FouPath& path);

/// {"hit": bool, "tau": number|null, "index": integer|null}
std::string to_json(const HitResult& hit);

}  // namespace fcir
