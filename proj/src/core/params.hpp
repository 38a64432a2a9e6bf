#pragma once

#include "types.hpp"

namespace fcir {

/// Parameters (H, a, sigma, y0) of dY = aY dt + sigma dB^H, Y_0 = y0.
/// The squared process solves dX = a~ X dt + sigma~ sqrt(X) o dB^H with
/// a~ = 2a, sigma~ = 2 sigma, x0 = y0^2.
struct ModelParams {
  HurstIndex hurst;
  double a;
  double sigma;
  double y0;

  ModelParams(HurstIndex h, double a_, double sigma_, double y0_);

  double a_tilde() const noexcept { return 2.0 * a; }
  double sigma_tilde() const noexcept { return 2.0 * sigma; }
  double x0() const noexcept { return y0 * y0; }
};

}  // namespace fcir
