#include "fcir/fcir.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "analytics.hpp"
#include "fcir.hpp"
#include "io.hpp"
#include "mc.hpp"
#include "parallel.hpp"
#include "validation.hpp"

struct fcir_context_s {
  unsigned threads;
};

struct fcir_path_s {
  fcir::SamplePath fbm;
  fcir::SamplePath j;
  fcir::FouPath fou;
  fcir::FcirPath x;
};

struct fcir_residual_report_s {
  fcir::ResidualReport report;
};

struct fcir_validation_report_s {
  std::vector<fcir::CheckResult> rows;
};

namespace {

thread_local std::string g_last_error;

fcir_status to_status(fcir::ErrorCode code) {
  using fcir::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return FCIR_ERR_INVALID_ARGUMENT;
    case ErrorCode::CovarianceNotPD: return FCIR_ERR_COVARIANCE_NOT_PD;
    case ErrorCode::EmbeddingNotNonnegative: return FCIR_ERR_EMBEDDING_NOT_NONNEGATIVE;
    case ErrorCode::NonpositiveStart: return FCIR_ERR_NONPOSITIVE_START;
    case ErrorCode::GridMismatch: return FCIR_ERR_GRID_MISMATCH;
    case ErrorCode::HurstTooSmall: return FCIR_ERR_HURST_TOO_SMALL;
    case ErrorCode::ToleranceNotMet: return FCIR_ERR_TOLERANCE_NOT_MET;
    case ErrorCode::DomainError: return FCIR_ERR_DOMAIN;
    case ErrorCode::ArgOrder: return FCIR_ERR_ARG_ORDER;
    case ErrorCode::HalfHurst: return FCIR_ERR_HALF_HURST;
  }
  return FCIR_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and the thread-local
// error message.
template <class Body>
fcir_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return FCIR_OK;
  } catch (const fcir::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown exception";
  }
  return FCIR_ERR_INTERNAL;
}

void require_ptr(const void* p, const char* name) {
  fcir::require(p != nullptr, fcir::ErrorCode::InvalidArgument,
                std::string(name) + " must not be NULL");
}

fcir::ModelParams params_of(const fcir_model_params* p) {
  require_ptr(p, "params");
  return fcir::ModelParams(fcir::HurstIndex(p->hurst), p->a, p->sigma, p->y0);
}

fcir::QuadSpec spec_of(const fcir_quad_spec* s) {
  if (!s) return {};
  fcir::QuadSpec spec{s->rel_tol, s->abs_tol, s->max_subdivisions};
  spec.validate();
  return spec;
}

fcir::BoundParams bounds_of(const fcir_bound_params* b) {
  if (!b) return {};
  fcir::BoundParams bounds{b->C, b->C1};
  bounds.validate();
  return bounds;
}

fcir::Generator generator_of(fcir_generator g) {
  switch (g) {
    case FCIR_GENERATOR_CIRCULANT: return fcir::Generator::Circulant;
    case FCIR_GENERATOR_CHOLESKY: return fcir::Generator::Cholesky;
  }
  fcir::fail(fcir::ErrorCode::InvalidArgument, "unknown generator");
}

fcir::McOptions mc_options_of(fcir_context ctx, const fcir_mc_options* o) {
  fcir::McOptions opts;
  if (o) {
    opts.n_paths = o->n_paths;
    opts.steps_per_unit = o->steps_per_unit;
    opts.generator = generator_of(o->generator);
  }
  opts.threads = ctx ? ctx->threads : 1;
  opts.validate();
  return opts;
}

fcir::Seed seed_of(fcir_seed s) { return fcir::Seed{s.master, s.stream_index}; }

void store(fcir_mc_estimate* out, const fcir::McEstimate& e) {
  *out = fcir_mc_estimate{e.mean, e.std_error, e.n_samples, e.elapsed};
}

fcir_path_s* build_path(const fcir::SamplePath& fbm, const fcir::ModelParams& params) {
  fcir::SamplePath j = fcir::integral_J(fbm, params.a);
  fcir::FouPath fou = fcir::simulate_fou(fbm, params);
  fcir::FcirPath x = fcir::simulate_fcir(fou);
  return new fcir_path_s{fbm, std::move(j), std::move(fou), std::move(x)};
}

fcir::SamplePath path_from(double t_max, size_t n_steps, const double* values) {
  require_ptr(values, "values");
  const fcir::TimeGrid grid(t_max, n_steps);
  return fcir::SamplePath(grid, std::vector<double>(values, values + grid.size()));
}

}  // namespace

extern "C" {

// ---------------------------------------------------------------------------
// library

const char* fcir_version(void) { return fcir::kVersion; }

const char* fcir_status_name(fcir_status status) {
  switch (status) {
    case FCIR_OK: return "OK";
    case FCIR_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FCIR_ERR_COVARIANCE_NOT_PD: return "CovarianceNotPD";
    case FCIR_ERR_EMBEDDING_NOT_NONNEGATIVE: return "EmbeddingNotNonnegative";
    case FCIR_ERR_NONPOSITIVE_START: return "NonpositiveStart";
    case FCIR_ERR_GRID_MISMATCH: return "GridMismatch";
    case FCIR_ERR_HURST_TOO_SMALL: return "HurstTooSmall";
    case FCIR_ERR_TOLERANCE_NOT_MET: return "ToleranceNotMet";
    case FCIR_ERR_DOMAIN: return "DomainError";
    case FCIR_ERR_ARG_ORDER: return "ArgOrder";
    case FCIR_ERR_HALF_HURST: return "HalfHurst";
    case FCIR_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* fcir_last_error(void) { return g_last_error.c_str(); }

fcir_quad_spec fcir_quad_spec_default(void) {
  const fcir::QuadSpec d{};
  return fcir_quad_spec{d.rel_tol, d.abs_tol, d.max_subdivisions};
}

fcir_mc_options fcir_mc_options_default(void) {
  const fcir::McOptions d{};
  return fcir_mc_options{d.n_paths, d.steps_per_unit, FCIR_GENERATOR_CIRCULANT};
}

fcir_status fcir_params_validate(const fcir_model_params* params) {
  return guarded([&] { (void)params_of(params); });
}

// ---------------------------------------------------------------------------
// context

fcir_status fcir_context_create(unsigned threads, fcir_context* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = new fcir_context_s{threads == 0 ? fcir::default_thread_count() : threads};
  });
}

unsigned fcir_context_threads(fcir_context ctx) { return ctx ? ctx->threads : 1; }

void fcir_context_destroy(fcir_context ctx) { delete ctx; }

// ---------------------------------------------------------------------------
// fbm

fcir_status fcir_fbm_cov(double t, double s, double hurst, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    fcir::require(t >= 0.0 && s >= 0.0, fcir::ErrorCode::InvalidArgument,
                  "times must be non-negative");
    *out = fcir::fbm_cov(t, s, fcir::HurstIndex(hurst));
  });
}

fcir_status fcir_gaussian_stream(fcir_seed seed, size_t count, double* out) {
  return guarded([&] {
    if (count == 0) return;
    require_ptr(out, "out");
    fcir::GaussianStream(seed_of(seed)).fill(std::span<double>(out, count));
  });
}

// ---------------------------------------------------------------------------
// paths

fcir_status fcir_path_simulate(const fcir_model_params* params, double t_max, size_t n_steps,
                               fcir_seed seed, fcir_generator generator, fcir_path* out) {
  return guarded([&] {
    require_ptr(out, "out");
    const fcir::ModelParams p = params_of(params);
    const fcir::TimeGrid grid(t_max, n_steps);
    const fcir::FbmSampler sampler(generator_of(generator), grid, p.hurst);
    fcir::GaussianStream noise(seed_of(seed));
    *out = build_path(sampler.sample(noise), p);
  });
}

fcir_status fcir_path_from_fbm(const fcir_model_params* params, double t_max, size_t n_steps,
                               const double* fbm_values, fcir_path* out) {
  return guarded([&] {
    require_ptr(out, "out");
    const fcir::ModelParams p = params_of(params);
    const fcir::SamplePath fbm = path_from(t_max, n_steps, fbm_values);
    fcir::require(fbm.values[0] == 0.0, fcir::ErrorCode::InvalidArgument,
                  "fBm path must start at 0");
    *out = build_path(fbm, p);
  });
}

size_t fcir_path_size(fcir_path path) { return path ? path->fbm.values.size() : 0; }

fcir_status fcir_path_column(fcir_path path, fcir_column column, double* out, size_t len) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(out, "out");
    const size_t n = path->fbm.values.size();
    fcir::require(len >= n, fcir::ErrorCode::InvalidArgument, "output buffer too small");
    switch (column) {
      case FCIR_COLUMN_TIME:
        for (size_t k = 0; k < n; ++k) out[k] = path->fbm.grid.time(k);
        return;
      case FCIR_COLUMN_FBM: std::copy_n(path->fbm.values.begin(), n, out); return;
      case FCIR_COLUMN_J: std::copy_n(path->j.values.begin(), n, out); return;
      case FCIR_COLUMN_FOU: std::copy_n(path->fou.values.begin(), n, out); return;
      case FCIR_COLUMN_FCIR: std::copy_n(path->x.values.begin(), n, out); return;
    }
    fcir::fail(fcir::ErrorCode::InvalidArgument, "unknown column");
  });
}

fcir_status fcir_path_hit(fcir_path path, fcir_hit_result* out) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(out, "out");
    const fcir::HitResult& h = path->x.tau;
    *out = fcir_hit_result{h.hit ? 1 : 0,
                           h.hit ? *h.tau : std::numeric_limits<double>::quiet_NaN(),
                           h.hit ? *h.index : 0};
  });
}

fcir_status fcir_path_write_csv(fcir_path path, const char* filename, uint64_t seed) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(filename, "filename");
    std::ofstream file(filename, std::ios::binary);
    fcir::require(file.good(), fcir::ErrorCode::InvalidArgument,
                  std::string("cannot open ") + filename + " for writing");
    file << fcir::provenance_line(seed) << '\n' << "t,B,Y,X\n";
    for (size_t k = 0; k < path->fbm.values.size(); ++k)
      file << fcir::format_double(path->fbm.grid.time(k)) << ','
           << fcir::format_double(path->fbm.values[k]) << ','
           << fcir::format_double(path->fou.values[k]) << ','
           << fcir::format_double(path->x.values[k]) << '\n';
    fcir::require(file.good(), fcir::ErrorCode::InvalidArgument, "write failed");
  });
}

fcir_status fcir_path_hit_json(fcir_path path, char* buf, size_t buf_len) {
  return guarded([&] {
    require_ptr(path, "path");
    require_ptr(buf, "buf");
    const std::string json = fcir::to_json(path->x.tau);
    fcir::require(buf_len > json.size(), fcir::ErrorCode::InvalidArgument, "buffer too small");
    std::memcpy(buf, json.c_str(), json.size() + 1);
  });
}

void fcir_path_destroy(fcir_path path) { delete path; }

// ---------------------------------------------------------------------------
// sums

fcir_status fcir_stratonovich_sum(double t_max, size_t n_steps, const double* f, const double* g,
                                  double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::stratonovich_sum(path_from(t_max, n_steps, f), path_from(t_max, n_steps, g));
  });
}

fcir_status fcir_rs_left_sum(double t_max, size_t n_steps, const double* f, const double* g,
                             double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::rs_left_sum(path_from(t_max, n_steps, f), path_from(t_max, n_steps, g));
  });
}

// ---------------------------------------------------------------------------
// residual ladder

fcir_status fcir_sde_residual(const fcir_model_params* params, double t_max, size_t finest_steps,
                              size_t min_steps, fcir_seed seed, fcir_generator generator,
                              fcir_integral_kind kind, fcir_residual_report* out) {
  return guarded([&] {
    require_ptr(out, "out");
    const fcir::ModelParams p = params_of(params);
    const auto k = kind == FCIR_RIEMANN_STIELTJES ? fcir::IntegralKind::RiemannStieltjes
                                                  : fcir::IntegralKind::Stratonovich;
    if (k == fcir::IntegralKind::RiemannStieltjes)
      fcir::require(p.hurst.value() > 2.0 / 3.0, fcir::ErrorCode::HurstTooSmall,
                    "Riemann-Stieltjes sums converge only for H > 2/3");
    const fcir::TimeGrid grid(t_max, finest_steps);
    const fcir::FbmSampler sampler(generator_of(generator), grid, p.hurst);
    fcir::GaussianStream noise(seed_of(seed));
    *out = new fcir_residual_report_s{fcir::sde_residual(sampler.sample(noise), p, k, min_steps)};
  });
}

size_t fcir_residual_report_size(fcir_residual_report report) {
  return report ? report->report.n_steps.size() : 0;
}

fcir_status fcir_residual_report_row(fcir_residual_report report, size_t i,
                                     fcir_residual_row* out) {
  return guarded([&] {
    require_ptr(report, "report");
    require_ptr(out, "out");
    const fcir::ResidualReport& r = report->report;
    fcir::require(i < r.n_steps.size(), fcir::ErrorCode::InvalidArgument, "row out of range");
    *out = fcir_residual_row{r.n_steps[i], r.mesh_sizes[i], r.max_residuals[i], r.rates[i]};
  });
}

void fcir_residual_report_destroy(fcir_residual_report report) { delete report; }

// ---------------------------------------------------------------------------
// analytics

fcir_status fcir_gamma(double x, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::gamma_fn(x);
  });
}

fcir_status fcir_ou_cov(double t, double s, const fcir_model_params* params,
                        const fcir_quad_spec* spec, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::ou_cov(t, s, params_of(params), spec_of(spec));
  });
}

fcir_status fcir_ou_var(double t, const fcir_model_params* params, const fcir_quad_spec* spec,
                        double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::ou_var(t, params_of(params), spec_of(spec));
  });
}

fcir_status fcir_j_cov(double s, double t, double a, double hurst, const fcir_quad_spec* spec,
                       double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::j_cov(s, t, a, fcir::HurstIndex(hurst), spec_of(spec));
  });
}

fcir_status fcir_j_var(double t, double a, double hurst, const fcir_quad_spec* spec,
                       double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::j_var(t, a, fcir::HurstIndex(hurst), spec_of(spec));
  });
}

fcir_status fcir_j_increment_var(double s, double t, double a, double hurst,
                                 const fcir_quad_spec* spec, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::j_increment_var(s, t, a, fcir::HurstIndex(hurst), spec_of(spec));
  });
}

fcir_status fcir_v_limit(double a, double hurst, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::v_limit(a, fcir::HurstIndex(hurst));
  });
}

fcir_status fcir_vtsq_derivative(double t, double a, double hurst, const fcir_quad_spec* spec,
                                 double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::vtsq_derivative(t, a, fcir::HurstIndex(hurst), spec_of(spec));
  });
}

fcir_status fcir_sup_tail_bound(double x, double a, double hurst, const fcir_bound_params* bounds,
                                fcir_tail_variant variant, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::sup_tail_bound(
        x, a, fcir::HurstIndex(hurst), bounds_of(bounds),
        variant == FCIR_TAIL_PROP2 ? fcir::TailVariant::Prop2 : fcir::TailVariant::Prop3);
  });
}

fcir_status fcir_tau_bound(const fcir_model_params* params, const fcir_bound_params* bounds,
                           double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::tau_bound(params_of(params), bounds_of(bounds));
  });
}

fcir_status fcir_ou_cov_asymptotic(double t, double s, const fcir_model_params* params,
                                   const fcir_quad_spec* spec, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = fcir::ou_cov_asymptotic(t, s, params_of(params), spec_of(spec));
  });
}

// ---------------------------------------------------------------------------
// Monte Carlo

fcir_status fcir_hitting_study(fcir_context ctx, const fcir_model_params* params,
                               const double* horizons, size_t n_horizons,
                               const fcir_mc_options* options, fcir_seed seed,
                               fcir_mc_estimate* out) {
  return guarded([&] {
    require_ptr(horizons, "horizons");
    require_ptr(out, "out");
    const auto study = fcir::hitting_study(params_of(params), {horizons, n_horizons},
                                           mc_options_of(ctx, options), seed_of(seed));
    for (size_t i = 0; i < n_horizons; ++i) store(out + i, study.estimates[i]);
  });
}

fcir_status fcir_tail_estimate(fcir_context ctx, double a, double hurst, const double* levels,
                               size_t n_levels, double horizon, const fcir_mc_options* options,
                               fcir_seed seed, fcir_tail_side side, int antithetic,
                               fcir_mc_estimate* out) {
  return guarded([&] {
    require_ptr(levels, "levels");
    require_ptr(out, "out");
    const auto est = fcir::estimate_tail(
        a, fcir::HurstIndex(hurst), {levels, n_levels}, horizon, mc_options_of(ctx, options),
        seed_of(seed), side == FCIR_TAIL_LOWER ? fcir::TailSide::Lower : fcir::TailSide::Upper,
        antithetic != 0);
    for (size_t i = 0; i < n_levels; ++i) store(out + i, est[i]);
  });
}

fcir_status fcir_empirical_cov(fcir_context ctx, fcir_cov_process process,
                               const fcir_model_params* params, const double* s, const double* t,
                               size_t n_pairs, const fcir_mc_options* options, fcir_seed seed,
                               fcir_mc_estimate* out) {
  return guarded([&] {
    require_ptr(s, "s");
    require_ptr(t, "t");
    require_ptr(out, "out");
    std::vector<std::pair<double, double>> pairs;
    for (size_t i = 0; i < n_pairs; ++i) pairs.emplace_back(s[i], t[i]);
    const auto est = fcir::empirical_cov(
        process == FCIR_PROCESS_J ? fcir::CovProcess::J : fcir::CovProcess::Fou,
        params_of(params), pairs, mc_options_of(ctx, options), seed_of(seed));
    for (size_t i = 0; i < n_pairs; ++i) store(out + i, est[i]);
  });
}

// ---------------------------------------------------------------------------
// validation

fcir_status fcir_validate(fcir_context ctx, const fcir_quad_spec* spec,
                          const fcir_mc_options* options, fcir_seed seed, int include_mc,
                          fcir_validation_report* out) {
  return guarded([&] {
    require_ptr(out, "out");
    fcir::ValidationOptions opts;
    opts.spec = spec_of(spec);
    opts.mc = mc_options_of(ctx, options);
    opts.seed = seed_of(seed);
    opts.include_mc = include_mc != 0;
    *out = new fcir_validation_report_s{fcir::run_validation(opts)};
  });
}

size_t fcir_validation_report_size(fcir_validation_report report) {
  return report ? report->rows.size() : 0;
}

fcir_status fcir_validation_report_row(fcir_validation_report report, size_t i,
                                       fcir_check_row* out) {
  return guarded([&] {
    require_ptr(report, "report");
    require_ptr(out, "out");
    fcir::require(i < report->rows.size(), fcir::ErrorCode::InvalidArgument, "row out of range");
    const fcir::CheckResult& r = report->rows[i];
    *out = fcir_check_row{r.check.c_str(), r.cell.c_str(), r.value, r.threshold,
                          r.passed ? 1 : 0, r.gating ? 1 : 0};
  });
}

void fcir_validation_report_destroy(fcir_validation_report report) { delete report; }

}  // extern "C"
