#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "fcir.hpp"
#include "fou.hpp"
#include "types.hpp"

namespace fcir {

inline constexpr const char* kVersion = "0.1.0";

/// %.17g; non-finite values print as nan / inf / -inf.
std::string format_double(double x);

/// "# fcir-lab <version> seed=<seed>"
std::string provenance_line(std::uint64_t seed);

void write_path_csv(std::ostream& out, const SamplePath& path);      // t,value
void write_fou_csv(std::ostream& out, const FouPath& path);          // t,Y
void write_residual_csv(std::ostream& out, const ResidualReport& r); // n_steps,delta,max_residual,rate

}  // namespace fcir
