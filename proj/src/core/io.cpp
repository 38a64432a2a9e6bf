#include "io.hpp"

#include <cmath>
#include <cstdio>

namespace fcir {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string provenance_line(std::uint64_t seed) {
  return std::string("# fcir-lab ") + kVersion + " seed=" + std::to_string(seed);
}

void write_path_csv(std::ostream& out, const SamplePath& path) {
  out << "t,value\n";
  for (std::size_t k = 0; k < path.values.size(); ++k)
    out << format_double(path.grid.time(k)) << ',' << format_double(path.values[k]) << '\n';
}

void write_fou_csv(std::ostream& out, const FouPath& path) {
  out << "t,Y\n";
  for (std::size_t k = 0; k < path.values.size(); ++k)
    out << format_double(path.grid.time(k)) << ',' << format_double(path.values[k]) << '\n';
}

void write_residual_csv(std::ostream& out, const ResidualReport& r) {
  out << "n_steps,delta,max_residual,rate\n";
  for (std::size_t j = 0; j < r.n_steps.size(); ++j)
    out << r.n_steps[j] << ',' << format_double(r.mesh_sizes[j]) << ','
        << format_double(r.max_residuals[j]) << ',' << format_double(r.rates[j]) << '\n';
}

}  // namespace fcir
