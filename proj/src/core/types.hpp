#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace fcir {

/// Hurst index, strictly inside (0, 1).
class HurstIndex {
 public:
  explicit HurstIndex(double value);

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// Uniform grid t_k = k * t_max / n_steps, k = 0..n_steps.
class TimeGrid {
 public:
  TimeGrid(double t_max, std::size_t n_steps);

  double t_max() const noexcept { return t_max_; }
  std::size_t n_steps() const noexcept { return n_steps_; }
  std::size_t size() const noexcept { return n_steps_ + 1; }
  double delta() const noexcept { return t_max_ / static_cast<double>(n_steps_); }
  double time(std::size_t k) const noexcept {
    return k == n_steps_ ? t_max_
                         : t_max_ * static_cast<double>(k) / static_cast<double>(n_steps_);
  }
  std::vector<double> times() const;

  /// Grid keeping every `stride`-th node; stride must divide n_steps.
  TimeGrid coarsen(std::size_t stride) const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  double t_max_;
  std::size_t n_steps_;
};

struct SamplePath {
  TimeGrid grid;
  std::vector<double> values;

  SamplePath(TimeGrid g, std::vector<double> v);

  /// Node-subsampled copy on grid.coarsen(stride).
  SamplePath restrict_to(std::size_t stride) const;
};

struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream_index = 0;
};

}  // namespace fcir
