#include "types.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace fcir {

HurstIndex::HurstIndex(double value) : value_(value) {
  require(value > 0.0 && value < 1.0, ErrorCode::InvalidArgument,
          "Hurst index H must lie in (0, 1), got " + std::to_string(value));
}

TimeGrid::TimeGrid(double t_max, std::size_t n_steps) : t_max_(t_max), n_steps_(n_steps) {
  require(std::isfinite(t_max) && t_max > 0.0, ErrorCode::InvalidArgument,
          "grid horizon must be positive and finite");
  require(n_steps >= 1, ErrorCode::InvalidArgument, "grid needs at least one step");
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> t(size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = time(k);
  return t;
}

TimeGrid TimeGrid::coarsen(std::size_t stride) const {
  require(stride >= 1 && n_steps_ % stride == 0, ErrorCode::InvalidArgument,
          "coarsening stride must divide the number of steps");
  return TimeGrid(t_max_, n_steps_ / stride);
}

SamplePath::SamplePath(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  require(values.size() == grid.size(), ErrorCode::GridMismatch,
          "path has " + std::to_string(values.size()) + " values for a grid of " +
              std::to_string(grid.size()) + " nodes");
}

SamplePath SamplePath::restrict_to(std::size_t stride) const {
  TimeGrid coarse = grid.coarsen(stride);
  std::vector<double> v(coarse.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values[k * stride];
  return SamplePath(coarse, std::move(v));
}

}  // namespace fcir
