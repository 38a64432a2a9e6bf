/*
 * fcir: simulation and analytics for the fractional Cox-Ingersoll-Ross
 * process X_t = Y_t^2 1{t < tau}, where Y is the fractional
 * Ornstein-Uhlenbeck process dY = aY dt + sigma dB^H and tau its first zero.
 *
 * C interface. Every call returns an fcir_status; on failure a message is
 * available from fcir_last_error() on the calling thread. Opaque handles are
 * created by *_create / *_simulate / *_run functions and released with the
 * matching *_destroy. All functions are reentrant; a handle may be read from
 * several threads at once but not destroyed concurrently with use.
 */
#ifndef FCIR_FCIR_H
#define FCIR_FCIR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FCIR_BUILDING_LIBRARY)
#    define FCIR_API __declspec(dllexport)
#  else
#    define FCIR_API __declspec(dllimport)
#  endif
#else
#  define FCIR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcir_status {
  FCIR_OK = 0,
  FCIR_ERR_INVALID_ARGUMENT = 1,
  FCIR_ERR_COVARIANCE_NOT_PD = 2,
  FCIR_ERR_EMBEDDING_NOT_NONNEGATIVE = 3,
  FCIR_ERR_NONPOSITIVE_START = 4,
  FCIR_ERR_GRID_MISMATCH = 5,
  FCIR_ERR_HURST_TOO_SMALL = 6,
  FCIR_ERR_TOLERANCE_NOT_MET = 7,
  FCIR_ERR_DOMAIN = 8,
  FCIR_ERR_ARG_ORDER = 9,
  FCIR_ERR_HALF_HURST = 10,
  FCIR_ERR_INTERNAL = 99
} fcir_status;

typedef enum fcir_generator {
  FCIR_GENERATOR_CIRCULANT = 0,
  FCIR_GENERATOR_CHOLESKY = 1
} fcir_generator;

typedef enum fcir_integral_kind {
  FCIR_STRATONOVICH = 0,
  FCIR_RIEMANN_STIELTJES = 1
} fcir_integral_kind;

typedef enum fcir_tail_variant { FCIR_TAIL_PROP2 = 0, FCIR_TAIL_PROP3 = 1 } fcir_tail_variant;
typedef enum fcir_tail_side { FCIR_TAIL_UPPER = 0, FCIR_TAIL_LOWER = 1 } fcir_tail_side;
typedef enum fcir_cov_process { FCIR_PROCESS_FOU = 0, FCIR_PROCESS_J = 1 } fcir_cov_process;

/* Columns of a simulated path. */
typedef enum fcir_column {
  FCIR_COLUMN_TIME = 0,
  FCIR_COLUMN_FBM = 1,  /* B^H */
  FCIR_COLUMN_J = 2,    /* int_0^t e^{-as} dB^H_s */
  FCIR_COLUMN_FOU = 3,  /* Y */
  FCIR_COLUMN_FCIR = 4  /* X */
} fcir_column;

typedef struct fcir_model_params {
  double hurst; /* (0, 1) */
  double a;
  double sigma; /* > 0 */
  double y0;
} fcir_model_params;

typedef struct fcir_quad_spec {
  double rel_tol;       /* default 1e-10 */
  double abs_tol;       /* default 1e-14 */
  int max_subdivisions; /* default 200 */
} fcir_quad_spec;

typedef struct fcir_seed {
  uint64_t master;
  uint64_t stream_index;
} fcir_seed;

typedef struct fcir_bound_params {
  double C;
  double C1;
} fcir_bound_params;

typedef struct fcir_hit_result {
  int hit;      /* 0 or 1 */
  double tau;   /* NaN when hit == 0 */
  size_t index; /* 0 when hit == 0 */
} fcir_hit_result;

typedef struct fcir_mc_estimate {
  double mean;
  double std_error;
  size_t n_samples;
  double elapsed; /* seconds */
} fcir_mc_estimate;

typedef struct fcir_mc_options {
  size_t n_paths;        /* default 20000 */
  size_t steps_per_unit; /* default 256 */
  fcir_generator generator;
} fcir_mc_options;

typedef struct fcir_residual_row {
  size_t n_steps;
  double delta;
  double max_residual;
  double rate; /* NaN for the coarsest mesh */
} fcir_residual_row;

typedef struct fcir_check_row {
  const char* check; /* valid while the owning report lives */
  const char* cell;
  double value;
  double threshold;
  int passed;
  int gating; /* 0 for per-cell rows whose verdict is a summary row */
} fcir_check_row;

typedef struct fcir_path_s* fcir_path;
typedef struct fcir_residual_report_s* fcir_residual_report;
typedef struct fcir_context_s* fcir_context;
typedef struct fcir_validation_report_s* fcir_validation_report;

/* ---- library ---------------------------------------------------------- */

FCIR_API const char* fcir_version(void);
FCIR_API const char* fcir_status_name(fcir_status status);
/* Message of the last failed call on this thread ("" if none). */
FCIR_API const char* fcir_last_error(void);
FCIR_API fcir_quad_spec fcir_quad_spec_default(void);
FCIR_API fcir_mc_options fcir_mc_options_default(void);
/* Checks every constraint of ModelParams (H in (0,1), sigma > 0, finite). */
FCIR_API fcir_status fcir_params_validate(const fcir_model_params* params);

/* ---- context (worker pool size for Monte Carlo) ------------------------ */

/* threads == 0 selects hardware concurrency. */
FCIR_API fcir_status fcir_context_create(unsigned threads, fcir_context* out);
FCIR_API unsigned fcir_context_threads(fcir_context ctx);
FCIR_API void fcir_context_destroy(fcir_context ctx);

/* ---- fbm ---------------------------------------------------------------- */

FCIR_API fcir_status fcir_fbm_cov(double t, double s, double hurst, double* out);
/* Fills out[0..count) with N(0,1) variates of substream 0 of `seed`. */
FCIR_API fcir_status fcir_gaussian_stream(fcir_seed seed, size_t count, double* out);

/* ---- paths (fbm -> J -> fOU -> fCIR on one grid) ------------------------ */

FCIR_API fcir_status fcir_path_simulate(const fcir_model_params* params, double t_max,
                                        size_t n_steps, fcir_seed seed,
                                        fcir_generator generator, fcir_path* out);
/* Builds a path from a caller-supplied fBm trajectory (values[0] must be 0). */
FCIR_API fcir_status fcir_path_from_fbm(const fcir_model_params* params, double t_max,
                                        size_t n_steps, const double* fbm_values,
                                        fcir_path* out);
FCIR_API size_t fcir_path_size(fcir_path path);
FCIR_API fcir_status fcir_path_column(fcir_path path, fcir_column column, double* out,
                                      size_t len);
FCIR_API fcir_status fcir_path_hit(fcir_path path, fcir_hit_result* out);
/* Writes CSV `t,B,Y,X` preceded by the provenance comment line. */
FCIR_API fcir_status fcir_path_write_csv(fcir_path path, const char* filename, uint64_t seed);
/* JSON object {"hit":..,"tau":..,"index":..} into buf (NUL-terminated). */
FCIR_API fcir_status fcir_path_hit_json(fcir_path path, char* buf, size_t buf_len);
FCIR_API void fcir_path_destroy(fcir_path path);

/* ---- integral sums ------------------------------------------------------ */

FCIR_API fcir_status fcir_stratonovich_sum(double t_max, size_t n_steps, const double* f,
                                           const double* g, double* out);
FCIR_API fcir_status fcir_rs_left_sum(double t_max, size_t n_steps, const double* f,
                                      const double* g, double* out);

/* ---- SDE residual ladder ------------------------------------------------ */

/* Simulates one fBm path with `finest_steps` steps on [0, t_max] and reports
 * residuals on meshes min_steps, 2 min_steps, ..., finest_steps. */
FCIR_API fcir_status fcir_sde_residual(const fcir_model_params* params, double t_max,
                                       size_t finest_steps, size_t min_steps, fcir_seed seed,
                                       fcir_generator generator, fcir_integral_kind kind,
                                       fcir_residual_report* out);
FCIR_API size_t fcir_residual_report_size(fcir_residual_report report);
FCIR_API fcir_status fcir_residual_report_row(fcir_residual_report report, size_t i,
                                              fcir_residual_row* out);
FCIR_API void fcir_residual_report_destroy(fcir_residual_report report);

/* ---- analytics (spec may be NULL for defaults) -------------------------- */

FCIR_API fcir_status fcir_gamma(double x, double* out);
FCIR_API fcir_status fcir_ou_cov(double t, double s, const fcir_model_params* params,
                                 const fcir_quad_spec* spec, double* out);
FCIR_API fcir_status fcir_ou_var(double t, const fcir_model_params* params,
                                 const fcir_quad_spec* spec, double* out);
FCIR_API fcir_status fcir_j_cov(double s, double t, double a, double hurst,
                                const fcir_quad_spec* spec, double* out);
FCIR_API fcir_status fcir_j_var(double t, double a, double hurst, const fcir_quad_spec* spec,
                                double* out);
FCIR_API fcir_status fcir_j_increment_var(double s, double t, double a, double hurst,
                                          const fcir_quad_spec* spec, double* out);
FCIR_API fcir_status fcir_v_limit(double a, double hurst, double* out);
FCIR_API fcir_status fcir_vtsq_derivative(double t, double a, double hurst,
                                          const fcir_quad_spec* spec, double* out);
FCIR_API fcir_status fcir_sup_tail_bound(double x, double a, double hurst,
                                         const fcir_bound_params* bounds,
                                         fcir_tail_variant variant, double* out);
FCIR_API fcir_status fcir_tau_bound(const fcir_model_params* params,
                                    const fcir_bound_params* bounds, double* out);
FCIR_API fcir_status fcir_ou_cov_asymptotic(double t, double s, const fcir_model_params* params,
                                            const fcir_quad_spec* spec, double* out);

/* ---- Monte Carlo (ctx may be NULL for a single thread) ------------------ */

/* out[i] = P(tau <= horizons[i]); all horizons share the same paths. */
FCIR_API fcir_status fcir_hitting_study(fcir_context ctx, const fcir_model_params* params,
                                        const double* horizons, size_t n_horizons,
                                        const fcir_mc_options* options, fcir_seed seed,
                                        fcir_mc_estimate* out);
FCIR_API fcir_status fcir_tail_estimate(fcir_context ctx, double a, double hurst,
                                        const double* levels, size_t n_levels, double horizon,
                                        const fcir_mc_options* options, fcir_seed seed,
                                        fcir_tail_side side, int antithetic,
                                        fcir_mc_estimate* out);
FCIR_API fcir_status fcir_empirical_cov(fcir_context ctx, fcir_cov_process process,
                                        const fcir_model_params* params, const double* s,
                                        const double* t, size_t n_pairs,
                                        const fcir_mc_options* options, fcir_seed seed,
                                        fcir_mc_estimate* out);

/* ---- invariant sweep ---------------------------------------------------- */

FCIR_API fcir_status fcir_validate(fcir_context ctx, const fcir_quad_spec* spec,
                                   const fcir_mc_options* options, fcir_seed seed,
                                   int include_mc, fcir_validation_report* out);
FCIR_API size_t fcir_validation_report_size(fcir_validation_report report);
FCIR_API fcir_status fcir_validation_report_row(fcir_validation_report report, size_t i,
                                                fcir_check_row* out);
FCIR_API void fcir_validation_report_destroy(fcir_validation_report report);

#ifdef __cplusplus
}
#endif

#endif /* FCIR_FCIR_H */
