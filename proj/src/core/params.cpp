#include "params.hpp"

#include <cmath>

namespace fcir {

ModelParams::ModelParams(HurstIndex h, double a_, double sigma_, double y0_)
    : hurst(h), a(a_), sigma(sigma_), y0(y0_) {
  require(std::isfinite(a), ErrorCode::InvalidArgument, "drift a must be finite");
  require(std::isfinite(sigma) && sigma > 0.0, ErrorCode::InvalidArgument,
          "volatility sigma must be positive");
  require(std::isfinite(y0), ErrorCode::InvalidArgument, "initial value y0 must be finite");
}

}  // namespace fcir
