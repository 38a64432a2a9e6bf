#pragma once

#include <functional>

namespace fcir {

struct QuadSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 200;

  void validate() const;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integral of f over [lo, hi].
///
/// `left_exponent` declares an integrable singularity (z - lo)^p, p > -1, at
/// the left endpoint. For p < 0 the substitution z = lo + u^{1/(p+1)} is
/// applied, which makes the transformed integrand bounded; for p >= 0 it is
/// ignored. Throws ToleranceNotMet when max_subdivisions intervals do not
/// reach max(abs_tol, rel_tol * |result|).
double quad(const Integrand& f, double lo, double hi, const QuadSpec& spec,
            double left_exponent = 0.0);

}  // namespace fcir
