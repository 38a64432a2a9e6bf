#include "doctest.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "io.hpp"
#include "validation.hpp"

using namespace fcir;

TEST_CASE("doubles print with round-trip precision") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("provenance line") { CHECK(provenance_line(42) == "# fcir-lab 0.1.0 seed=42"); }

TEST_CASE("path and residual CSV layouts") {
  std::ostringstream path_out;
  write_path_csv(path_out, SamplePath(TimeGrid(1.0, 2), {0.0, 0.25, -1.5}));
  CHECK(path_out.str() == "t,value\n0,0\n0.5,0.25\n1,-1.5\n");

  std::ostringstream fou_out;
  write_fou_csv(fou_out, FouPath{TimeGrid(2.0, 1), {1.0, 3.0}, ModelParams(HurstIndex(0.5), 0.0, 1.0, 1.0)});
  CHECK(fou_out.str() == "t,Y\n0,1\n2,3\n");

  ResidualReport r;
  r.n_steps = {4, 8};
  r.mesh_sizes = {0.25, 0.125};
  r.max_residuals = {0.5, 0.125};
  r.rates = {std::numeric_limits<double>::quiet_NaN(), 2.0};
  std::ostringstream res_out;
  write_residual_csv(res_out, r);
  CHECK(res_out.str() == "n_steps,delta,max_residual,rate\n4,0.25,0.5,nan\n8,0.125,0.125,2\n");
}

TEST_CASE("analytic invariant sweep passes") {
  ValidationOptions opts;
  opts.include_mc = false;
  const auto rows = run_validation(opts);
  CHECK(rows.size() > 100);
  for (const auto& row : rows) {
    CAPTURE(row.check);
    CAPTURE(row.cell);
    CHECK(row.passed);
    CHECK(row.gating);
  }
}
