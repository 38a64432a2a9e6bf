#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fcir {
namespace {

// Kronrod 15-point nodes (non-negative half) and weights; Gauss 7-point
// weights for the odd-indexed Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  // QUADPACK error scaling.
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  return {lo, hi, value, err};
}

double adaptive(const Integrand& f, double lo, double hi, const QuadSpec& spec) {
  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, lo, hi);
  double total = first.value;
  double total_err = first.error;
  panels.push(first);
  int count = 1;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (count >= spec.max_subdivisions)
      fail(ErrorCode::ToleranceNotMet,
           "quadrature on [" + std::to_string(lo) + ", " + std::to_string(hi) +
               "] reached " + std::to_string(count) + " subdivisions with error estimate " +
               std::to_string(total_err));
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      fail(ErrorCode::ToleranceNotMet, "quadrature interval cannot be bisected further");
    Panel left = gauss_kronrod(f, worst.lo, mid);
    Panel right = gauss_kronrod(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
    if (!std::isfinite(total))
      fail(ErrorCode::ToleranceNotMet, "integrand produced a non-finite value");
  }
  // Re-sum to drop accumulated update roundoff.
  double sum = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    panels.pop();
  }
  return sum;
}

}  // namespace

void QuadSpec::validate() const {
  require(rel_tol > 0.0 && abs_tol > 0.0, ErrorCode::InvalidArgument,
          "quadrature tolerances must be positive");
  require(max_subdivisions >= 1, ErrorCode::InvalidArgument,
          "max_subdivisions must be at least 1");
}

double quad(const Integrand& f, double lo, double hi, const QuadSpec& spec,
            double left_exponent) {
  spec.validate();
  require(lo <= hi, ErrorCode::InvalidArgument, "quadrature bounds must satisfy lo <= hi");
  require(left_exponent > -1.0, ErrorCode::InvalidArgument,
          "endpoint exponent must exceed -1");
  if (lo == hi) return 0.0;
  if (left_exponent >= 0.0) return adaptive(f, lo, hi, spec);

  // z = lo + u^q with q = 1/(p+1): dz = q u^{q-1} du cancels (z - lo)^p.
  const double q = 1.0 / (left_exponent + 1.0);
  const double u_hi = std::pow(hi - lo, left_exponent + 1.0);
  Integrand g = [&](double u) {
    if (u <= 0.0) return 0.0;
    return f(lo + std::pow(u, q)) * q * std::pow(u, q - 1.0);
  };
  return adaptive(g, 0.0, u_hi, spec);
}

}  // namespace fcir
