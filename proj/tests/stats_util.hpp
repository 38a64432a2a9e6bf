#pragma once

// Small sample-statistics helpers shared by the Monte Carlo style tests.

#include <cmath>
#include <span>

namespace fcir::test {

struct Moments {
  double mean;
  double var;       // unbiased
  double mean_se;   // standard error of the mean
  double var_se;    // standard error of the variance estimate
};

inline Moments moments(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double m = 0.0;
  for (double v : x) m += v;
  m /= n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  const double var = m2 / (n - 1.0);
  const double fourth = m4 / n;
  return {m, var, std::sqrt(var / n), std::sqrt(std::max(0.0, fourth - var * var) / n)};
}

/// Mean of x*y with the standard error of that mean.
inline std::pair<double, double> mean_product(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m += x[i] * y[i];
  m /= n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) ss += (x[i] * y[i] - m) * (x[i] * y[i] - m);
  return {m, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace fcir::test
