// fcir-lab: command-line front end over the fcir C interface.
//
// Exit codes: 0 success, 1 runtime or numerical failure, 2 invalid input,
// 3 a requested check failed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fcir/fcir.h"

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kRuntime = 1, kInvalid = 2, kCheckFailed = 3 };

// Thrown for any failure that should end the run with a given exit code.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& msg) { throw Failure{kInvalid, msg}; }

void check(fcir_status st) {
  if (st == FCIR_OK) return;
  std::string msg = fcir_last_error();
  switch (st) {
    case FCIR_ERR_INVALID_ARGUMENT:
    case FCIR_ERR_NONPOSITIVE_START:
    case FCIR_ERR_HURST_TOO_SMALL:
    case FCIR_ERR_DOMAIN:
    case FCIR_ERR_ARG_ORDER:
    case FCIR_ERR_HALF_HURST:
      throw Failure{kInvalid, msg};
    default:
      throw Failure{kRuntime, msg};
  }
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string provenance(std::uint64_t seed) {
  return std::string("# fcir-lab ") + fcir_version() + " seed=" + std::to_string(seed) + "\n";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kRuntime, "cannot open " + path + " for writing"};
  out << body;
  if (!out) throw Failure{kRuntime, "failed writing " + path};
}

unsigned default_threads() {
  if (const char* env = std::getenv("FCIR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) invalid("FCIR_THREADS must be a non-negative integer");
    return static_cast<unsigned>(v);
  }
  return 0;  // hardware concurrency
}

struct Context {
  fcir_context ctx = nullptr;
  explicit Context(unsigned threads) { check(fcir_context_create(threads, &ctx)); }
  ~Context() { fcir_context_destroy(ctx); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

// ---------------------------------------------------------------------------
// options

struct Options {
  double H = 0.7;
  double a = 0.5;
  double sigma = 0.5;
  double y0 = 1.0;
  double T = 1.0;
  std::size_t n_steps = 0;  // 0: command default
  std::size_t min_steps = 256;
  std::size_t n_paths = 20000;
  std::size_t steps_per_unit = 256;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string out;
  std::string generator = "circulant";
  double tol = 1e-10;
  std::string config;

  // list-valued options
  std::vector<double> H_list, a_list, sigma_list, y0_list, t_list, s_list, horizons, levels;
  std::string table = "cov";
  std::string kind = "stratonovich";
  double threshold = 1e-2;
  double C = 1.0;
  double C1 = 1.0;
  bool antithetic = false;
  bool no_refine = false;
  bool no_mc = false;
};

fcir_generator generator_of(const std::string& name) {
  return name == "cholesky" ? FCIR_GENERATOR_CHOLESKY : FCIR_GENERATOR_CIRCULANT;
}

fcir_model_params model_of(const Options& o) {
  fcir_model_params p{o.H, o.a, o.sigma, o.y0};
  check(fcir_params_validate(&p));
  return p;
}

fcir_quad_spec spec_of(const Options& o) {
  fcir_quad_spec s = fcir_quad_spec_default();
  s.rel_tol = o.tol;
  return s;
}

fcir_mc_options mc_of(const Options& o) {
  if (o.n_paths == 0) invalid("--n-paths must be at least 1");
  if (o.steps_per_unit == 0) invalid("--steps-per-unit must be at least 1");
  fcir_mc_options m = fcir_mc_options_default();
  m.n_paths = o.n_paths;
  m.steps_per_unit = o.steps_per_unit;
  m.generator = generator_of(o.generator);
  return m;
}

void add_model(CLI::App* cmd, Options& o) {
  cmd->add_option("--H", o.H, "Hurst index in (0, 1)")->capture_default_str();
  cmd->add_option("--a", o.a, "drift rate a")->capture_default_str();
  cmd->add_option("--sigma", o.sigma, "volatility sigma > 0")->capture_default_str();
  cmd->add_option("--y0", o.y0, "initial value Y_0")->capture_default_str();
}

void add_run(CLI::App* cmd, Options& o, const std::string& default_out) {
  cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
  cmd->add_option("--out", o.out, "output CSV path (default " + default_out + ")");
  cmd->add_option("--generator", o.generator, "fBm generator")
      ->check(CLI::IsMember({"circulant", "cholesky"}))
      ->capture_default_str();
  cmd->add_option("--config", o.config, "JSON file of option values; flags override it");
}

void add_mc(CLI::App* cmd, Options& o) {
  cmd->add_option("--n-paths", o.n_paths, "Monte Carlo paths")->capture_default_str();
  cmd->add_option("--steps-per-unit", o.steps_per_unit, "grid steps per unit time")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads (0: all cores; env FCIR_THREADS)");
}

// ---------------------------------------------------------------------------
// commands

int cmd_simulate(const Options& o) {
  const fcir_model_params p = model_of(o);
  if (!(o.T > 0.0)) invalid("--T must be positive");
  const std::size_t n = o.n_steps ? o.n_steps : 1024;
  fcir_path path = nullptr;
  check(fcir_path_simulate(&p, o.T, n, fcir_seed{o.seed, 0}, generator_of(o.generator), &path));
  std::unique_ptr<fcir_path_s, void (*)(fcir_path)> guard(path, fcir_path_destroy);
  check(fcir_path_write_csv(path, o.out.c_str(), o.seed));
  char buf[256];
  check(fcir_path_hit_json(path, buf, sizeof buf));
  std::cout << buf << "\n";
  return kOk;
}

int cmd_cov_table(const Options& o) {
  std::ostringstream csv;
  csv << provenance(o.seed);
  const fcir_bound_params bounds{o.C, o.C1};
  bool all_ok = true;

  if (o.table == "bound") {
    if (o.H_list.empty() || o.a_list.empty() || o.sigma_list.empty() || o.y0_list.empty())
      invalid("empty lattice: --H, --a, --sigma and --y0 need at least one value");
    csv << "H,a,sigma,y0,C1,bound\n";
    for (double h : o.H_list)
      for (double a : o.a_list)
        for (double sigma : o.sigma_list)
          for (double y0 : o.y0_list) {
            const fcir_model_params p{h, a, sigma, y0};
            check(fcir_params_validate(&p));
            double b = 0.0;
            check(fcir_tau_bound(&p, &bounds, &b));
            csv << num(h) << ',' << num(a) << ',' << num(sigma) << ',' << num(y0) << ','
                << num(o.C1) << ',' << num(b) << '\n';
          }
    write_file(o.out, csv.str());
    std::cout << json{{"rows_written", o.H_list.size() * o.a_list.size() * o.sigma_list.size() *
                                           o.y0_list.size()},
                      {"label", "shape-only bound"},
                      {"C1", o.C1}}
                     .dump()
              << "\n";
    return kOk;
  }

  if (o.H_list.empty() || o.a_list.empty() || o.sigma_list.empty() || o.t_list.empty() ||
      o.s_list.empty())
    invalid("empty lattice: --H, --a, --sigma, --t and --s need at least one value");
  const fcir_quad_spec spec = spec_of(o);
  std::size_t rows = 0, diag_rows = 0;
  double worst = 0.0;
  // `check` is the diagonal gap |R(t,t) - var(t)| in units of its tolerance.
  csv << "H,a,sigma,t,s,R,check\n";
  for (double h : o.H_list)
    for (double a : o.a_list)
      for (double sigma : o.sigma_list)
        for (double t : o.t_list)
          for (double s : o.s_list) {
            const fcir_model_params p{h, a, sigma, 0.0};
            check(fcir_params_validate(&p));
            double r = 0.0;
            check(fcir_ou_cov(t, s, &p, &spec, &r));
            csv << num(h) << ',' << num(a) << ',' << num(sigma) << ',' << num(t) << ',' << num(s)
                << ',' << num(r) << ',';
            if (t == s) {
              double v = 0.0;
              check(fcir_ou_var(t, &p, &spec, &v));
              const double gap = std::abs(r - v);
              const double allowed = 2.0 * (spec.rel_tol * std::abs(v) + spec.abs_tol);
              all_ok = all_ok && gap <= allowed;
              worst = std::max(worst, gap / allowed);
              ++diag_rows;
              csv << num(gap / allowed);
            }
            csv << '\n';
            ++rows;
          }
  write_file(o.out, csv.str());
  std::cout << json{{"rows_written", rows},
                    {"diagonal_rows", diag_rows},
                    {"worst_diag_gap_over_tolerance", worst},
                    {"diagonal_identity_ok", all_ok}}
                   .dump()
            << "\n";
  return all_ok ? kOk : kCheckFailed;
}

int cmd_sde_check(const Options& o) {
  const fcir_model_params p = model_of(o);
  if (!(o.T > 0.0)) invalid("--T must be positive");
  if (o.threshold < 0.0) invalid("--threshold must be non-negative");
  const fcir_integral_kind kind =
      o.kind == "riemann_stieltjes" ? FCIR_RIEMANN_STIELTJES : FCIR_STRATONOVICH;
  const std::size_t finest = o.n_steps ? o.n_steps : (1u << 14);
  fcir_residual_report report = nullptr;
  check(fcir_sde_residual(&p, o.T, finest, o.min_steps, fcir_seed{o.seed, 0},
                          generator_of(o.generator), kind, &report));
  std::unique_ptr<fcir_residual_report_s, void (*)(fcir_residual_report)> guard(
      report, fcir_residual_report_destroy);

  std::ostringstream csv;
  csv << provenance(o.seed) << "n_steps,delta,max_residual,rate\n";
  std::vector<double> residuals;
  for (std::size_t i = 0; i < fcir_residual_report_size(report); ++i) {
    fcir_residual_row row;
    check(fcir_residual_report_row(report, i, &row));
    residuals.push_back(row.max_residual);
    csv << row.n_steps << ',' << num(row.delta) << ',' << num(row.max_residual) << ','
        << num(row.rate) << '\n';
  }
  write_file(o.out, csv.str());

  bool decreasing = residuals.size() >= 4;
  for (std::size_t i = residuals.size() >= 3 ? residuals.size() - 3 : 1; i < residuals.size(); ++i)
    decreasing = decreasing && residuals[i] < residuals[i - 1];
  const double final_residual = residuals.back();
  const bool below = final_residual <= o.threshold;
  std::cout << json{{"kind", o.kind},
                    {"final_residual", final_residual},
                    {"threshold", o.threshold},
                    {"below_threshold", below},
                    {"last_three_decreasing", decreasing}}
                   .dump()
            << "\n";
  return below && decreasing ? kOk : kCheckFailed;
}

int cmd_hitting(const Options& o) {
  const fcir_model_params p = model_of(o);
  if (p.y0 <= 0.0) invalid("--y0 must be positive for a hitting study");
  std::vector<double> horizons = o.horizons;
  if (horizons.empty()) horizons = {1.0, 2.0, 4.0, 8.0};
  for (double h : horizons)
    if (!(h > 0.0)) invalid("horizons --T must be positive");
  std::sort(horizons.begin(), horizons.end());
  fcir_mc_options mc = mc_of(o);
  Context ctx(o.threads);

  std::ostringstream csv;
  csv << provenance(o.seed) << "T,estimate,stderr,n_paths,steps_per_unit\n";
  std::vector<fcir_mc_estimate> est(horizons.size());
  std::vector<std::size_t> ladders = {mc.steps_per_unit};
  if (!o.no_refine) ladders.push_back(2 * mc.steps_per_unit);
  json refined = json::array();
  for (std::size_t spu : ladders) {
    mc.steps_per_unit = spu;
    check(fcir_hitting_study(ctx.ctx, &p, horizons.data(), horizons.size(), &mc,
                             fcir_seed{o.seed, 0}, est.data()));
    for (std::size_t i = 0; i < horizons.size(); ++i)
      csv << num(horizons[i]) << ',' << num(est[i].mean) << ',' << num(est[i].std_error) << ','
          << est[i].n_samples << ',' << spu << '\n';
    refined.push_back({{"steps_per_unit", spu}, {"estimate_at_max_T", est.back().mean},
                       {"stderr", est.back().std_error}});
  }
  write_file(o.out, csv.str());

  json summary{{"max_T", horizons.back()},
               {"runs", refined},
               {"note", "finite-horizon estimates are lower bounds for P(tau < inf)"}};
  if (p.a > 0.0) {
    const fcir_bound_params bounds{o.C, o.C1};
    double bound = 0.0;
    check(fcir_tau_bound(&p, &bounds, &bound));
    summary["bound"] = bound;
    summary["C1"] = o.C1;
    summary["label"] = "shape-only bound";
    summary["ratio"] = est.back().mean / bound;
  }
  std::cout << summary.dump() << "\n";
  return kOk;
}

int cmd_sup_tail(const Options& o) {
  if (!(o.T > 0.0)) invalid("--T must be positive");
  std::vector<double> levels = o.levels;
  if (levels.empty()) levels = {0.5, 1.0, 1.5, 2.0};
  std::sort(levels.begin(), levels.end());
  if (std::adjacent_find(levels.begin(), levels.end()) != levels.end())
    invalid("--levels must be distinct");
  const fcir_model_params p{o.H, o.a, 1.0, 1.0};
  check(fcir_params_validate(&p));
  const fcir_mc_options mc = mc_of(o);
  Context ctx(o.threads);

  // With --antithetic the draws are negated and the mirrored event
  // min J <= -x is counted, which reproduces the plain run exactly.
  std::vector<double> query = levels;
  fcir_tail_side side = FCIR_TAIL_UPPER;
  if (o.antithetic) {
    for (double& x : query) x = -x;
    side = FCIR_TAIL_LOWER;
  }
  std::vector<fcir_mc_estimate> est(levels.size());
  check(fcir_tail_estimate(ctx.ctx, o.a, o.H, query.data(), query.size(), o.T, &mc,
                           fcir_seed{o.seed, 0}, side, o.antithetic ? 1 : 0, est.data()));

  std::ostringstream csv;
  csv << provenance(o.seed) << "x,estimate,stderr\n";
  for (std::size_t i = 0; i < levels.size(); ++i)
    csv << num(levels[i]) << ',' << num(est[i].mean) << ',' << num(est[i].std_error) << '\n';
  write_file(o.out, csv.str());

  json summary{{"T", o.T}, {"antithetic", o.antithetic},
               {"note", "finite-horizon estimates are lower bounds for P(sup J >= x)"}};
  if (o.a > 0.0) {
    const fcir_bound_params bounds{o.C, o.C1};
    json rows = json::array();
    for (double x : levels) {
      if (x <= 0.0) continue;
      double b2 = 0.0, b3 = 0.0;
      check(fcir_sup_tail_bound(x, o.a, o.H, &bounds, FCIR_TAIL_PROP2, &b2));
      check(fcir_sup_tail_bound(x, o.a, o.H, &bounds, FCIR_TAIL_PROP3, &b3));
      rows.push_back({{"x", x}, {"bound_C", b2}, {"bound_C1", b3}});
    }
    summary["bounds"] = rows;
    summary["label"] = "shape-only bound";
  }
  std::cout << summary.dump() << "\n";
  return kOk;
}

int cmd_validate(const Options& o) {
  const fcir_quad_spec spec = spec_of(o);
  const fcir_mc_options mc = mc_of(o);
  Context ctx(o.threads);
  fcir_validation_report report = nullptr;
  check(fcir_validate(ctx.ctx, &spec, &mc, fcir_seed{o.seed, 0}, o.no_mc ? 0 : 1, &report));
  std::unique_ptr<fcir_validation_report_s, void (*)(fcir_validation_report)> guard(
      report, fcir_validation_report_destroy);

  std::ostringstream csv;
  csv << provenance(o.seed) << "check,cell,value,threshold,passed,gating\n";
  std::size_t failed = 0, rows = fcir_validation_report_size(report);
  for (std::size_t i = 0; i < rows; ++i) {
    fcir_check_row row;
    check(fcir_validation_report_row(report, i, &row));
    if (row.gating && !row.passed) ++failed;
    csv << row.check << ",\"" << row.cell << "\"," << num(row.value) << ',' << num(row.threshold)
        << ',' << (row.passed ? "true" : "false") << ',' << (row.gating ? "true" : "false")
        << '\n';
  }
  write_file(o.out, csv.str());
  std::cout << json{{"rows", rows}, {"gating_failures", failed}}.dump() << "\n";
  return failed == 0 ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// --config: JSON values become flags placed right after the subcommand,
// skipping any flag the command line sets explicitly.

bool flag_given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number()) return num(v.get<double>());
  invalid("config values must be numbers, strings, booleans or arrays of those");
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.size() < 2) return args;
  std::ifstream in(path);
  if (!in) invalid("cannot read config file " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    invalid("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) invalid("config file must hold a JSON object");

  std::vector<std::string> inserted;
  for (const auto& [key, value] : cfg.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin() + 2, flag.end(), '_', '-');
    if (flag == "--config" || flag_given(args, flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) inserted.push_back(flag);
      continue;
    }
    std::string text;
    if (value.is_array()) {
      for (const auto& item : value) text += (text.empty() ? "" : ",") + scalar_text(item);
    } else {
      text = scalar_text(value);
    }
    inserted.push_back(flag);
    inserted.push_back(text);
  }
  std::vector<std::string> out(args.begin(), args.begin() + 2);
  out.insert(out.end(), inserted.begin(), inserted.end());
  out.insert(out.end(), args.begin() + 2, args.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fcir-lab: fractional CIR simulation, analytics and Monte Carlo studies"};
  app.set_version_flag("--version", std::string(fcir_version()));
  app.require_subcommand(1);
  Options o;
  o.threads = 0;

  auto* simulate = app.add_subcommand("simulate", "simulate one path and write t,B,Y,X");
  add_model(simulate, o);
  simulate->add_option("--T", o.T, "horizon")->capture_default_str();
  simulate->add_option("--n-steps", o.n_steps, "grid steps (default 1024)");
  add_run(simulate, o, "simulate.csv");

  auto* cov = app.add_subcommand("cov-table", "fOU covariance lattice or hitting-bound table");
  cov->add_option("--H", o.H_list, "Hurst indices")->delimiter(',');
  cov->add_option("--a", o.a_list, "drift rates")->delimiter(',');
  cov->add_option("--sigma", o.sigma_list, "volatilities")->delimiter(',');
  cov->add_option("--y0", o.y0_list, "initial values (bound table)")->delimiter(',');
  cov->add_option("--t", o.t_list, "times t")->delimiter(',');
  cov->add_option("--s", o.s_list, "times s")->delimiter(',');
  cov->add_option("--table", o.table, "table kind")
      ->check(CLI::IsMember({"cov", "bound"}))
      ->capture_default_str();
  cov->add_option("--tol", o.tol, "quadrature relative tolerance")->capture_default_str();
  cov->add_option("--C1", o.C1, "hitting-bound constant (shape-only)")->capture_default_str();
  add_run(cov, o, "cov_table.csv");

  auto* sde = app.add_subcommand("sde-check", "pathwise SDE residual under mesh refinement");
  add_model(sde, o);
  sde->add_option("--T", o.T, "horizon")->capture_default_str();
  sde->add_option("--n-steps", o.n_steps, "finest grid steps (default 16384)");
  sde->add_option("--min-steps", o.min_steps, "coarsest grid steps")->capture_default_str();
  sde->add_option("--kind", o.kind, "integral sums")
      ->check(CLI::IsMember({"stratonovich", "riemann_stieltjes"}))
      ->capture_default_str();
  sde->add_option("--threshold", o.threshold, "largest accepted final residual")
      ->capture_default_str();
  add_run(sde, o, "sde_check.csv");

  auto* hit = app.add_subcommand("hitting", "Monte Carlo P(tau <= T) over a horizon ladder");
  add_model(hit, o);
  hit->add_option("--T", o.horizons, "horizons (default 1,2,4,8)")->delimiter(',');
  hit->add_flag("--no-refine", o.no_refine, "skip the 2x steps-per-unit refinement run");
  hit->add_option("--C1", o.C1, "hitting-bound constant (shape-only)")->capture_default_str();
  add_mc(hit, o);
  add_run(hit, o, "hitting.csv");

  auto* tail = app.add_subcommand("sup-tail", "Monte Carlo P(max_[0,T] J >= x)");
  tail->add_option("--H", o.H, "Hurst index in (0, 1)")->capture_default_str();
  tail->add_option("--a", o.a, "drift rate a")->capture_default_str();
  tail->add_option("--T", o.T, "horizon")->capture_default_str();
  tail->add_option("--levels", o.levels, "levels x (default 0.5,1,1.5,2)")->delimiter(',');
  tail->add_flag("--antithetic", o.antithetic, "negate all draws and count min J <= -x");
  tail->add_option("--C", o.C, "sup-tail constant (shape-only)")->capture_default_str();
  tail->add_option("--C1", o.C1, "sup-tail constant (shape-only)")->capture_default_str();
  add_mc(tail, o);
  add_run(tail, o, "sup_tail.csv");

  auto* val = app.add_subcommand("validate", "invariant sweep and Monte Carlo coverage");
  val->add_option("--tol", o.tol, "quadrature relative tolerance")->capture_default_str();
  val->add_flag("--no-mc", o.no_mc, "skip the Monte Carlo covariance calibration");
  add_mc(val, o);
  add_run(val, o, "validate.csv");

  std::vector<std::string> args(argv, argv + argc);
  try {
    o.threads = default_threads();
    args = expand_config(args);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  auto out_or = [&](const char* fallback) {
    if (o.out.empty()) o.out = fallback;
  };
  try {
    if (*simulate) return out_or("simulate.csv"), cmd_simulate(o);
    if (*cov) return out_or("cov_table.csv"), cmd_cov_table(o);
    if (*sde) return out_or("sde_check.csv"), cmd_sde_check(o);
    if (*hit) return out_or("hitting.csv"), cmd_hitting(o);
    if (*tail) return out_or("sup_tail.csv"), cmd_sup_tail(o);
    if (*val) return out_or("validate.csv"), cmd_validate(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kInvalid;
}
