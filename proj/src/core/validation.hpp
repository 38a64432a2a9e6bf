#pragma once

#include <string>
#include <vector>

#include "mc.hpp"
#include "quadrature.hpp"

namespace fcir {

struct CheckResult {
  std::string check;
  std::string cell;
  double value;
  double threshold;
  bool passed;
  bool gating = true;  // false for per-cell rows summarized elsewhere
};

struct ValidationOptions {
  QuadSpec spec{};
  McOptions mc{};
  Seed seed{20240601, 0};
  bool include_mc = true;
};

/// Invariant sweep over the analytics lattice plus (optionally) the Monte
/// Carlo covariance coverage calibration. One row per checked cell; the Monte
/// Carlo cells are non-gating and summarized by a single coverage row.
std::vector<CheckResult> run_validation(const ValidationOptions& options);

}  // namespace fcir
