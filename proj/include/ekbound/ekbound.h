// Copyright 2026 The ekbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to libekbound.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an ekb_status; on failure a description of
 * the last error on the calling thread is available from ekb_last_error().
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with ekb_string_free().
 *
 * Coefficients are always given in ascending power order: a_0 first.
 */
#ifndef EKBOUND_EKBOUND_H
#define EKBOUND_EKBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EKBOUND_BUILDING_LIBRARY)
#    define EKB_API __declspec(dllexport)
#  else
#    define EKB_API __declspec(dllimport)
#  endif
#else
#  define EKB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ekb_status {
  EKB_OK = 0,
  EKB_MALFORMED_INPUT = 1,
  EKB_DEGENERATE_LEADING = 2,
  EKB_TOO_SHORT = 3,
  EKB_HYPOTHESIS_VIOLATED = 4,
  EKB_BAD_PARAM = 5,
  EKB_INFEASIBLE = 6,
  EKB_NOT_CONVERGED = 7,
  EKB_ZERO_RADIUS = 8,
  EKB_IO_ERROR = 9,
  EKB_INVALID_ARGUMENT = 10, /* null handle/pointer, index out of range */
  EKB_INTERNAL_ERROR = 11
} ekb_status;

typedef enum ekb_theorem {
  EKB_THEOREM_A = 0,
  EKB_THEOREM_B = 1,
  EKB_THEOREM_C = 2,
  EKB_THEOREM_D = 3,
  EKB_THEOREM_E = 4,
  EKB_THEOREM_COR1 = 5,
  EKB_THEOREM_T1 = 6,
  EKB_THEOREM_T2 = 7,
  EKB_THEOREM_T3 = 8
} ekb_theorem;

typedef enum ekb_containment {
  EKB_CONTAINED = 0,
  EKB_FAILED = 1,
  EKB_INCONCLUSIVE = 2,
  EKB_UNCHECKED = 3
} ekb_containment;

typedef enum ekb_leading_sign {
  EKB_LEADING_ANY = 0,
  EKB_LEADING_POSITIVE = 1,
  EKB_LEADING_NEGATIVE = 2
} ekb_leading_sign;

/* Parameters for one theorem. Only the fields the theorem uses are read:
 * C: k | D, COR1: k, rho | E: rho, lambda | T1: alpha, beta |
 * T2: s, lambda | T3: s, t, lambda. */
typedef struct ekb_params {
  ekb_theorem theorem;
  double alpha;
  double beta;
  double k;
  double rho;
  double s;
  double t;
  int lambda;
} ekb_params;

typedef struct ekb_disk {
  double center_re;
  double center_im;
  double radius;
} ekb_disk;

typedef struct ekb_solver_options {
  double tol;   /* max relative step, default 1e-13 */
  int max_iter; /* default 1000 */
} ekb_solver_options;

typedef struct ekb_polynomial ekb_polynomial;
typedef struct ekb_rootset ekb_rootset;
typedef struct ekb_report ekb_report;

EKB_API const char* ekb_status_string(ekb_status status);
EKB_API const char* ekb_last_error(void);
EKB_API void ekb_string_free(char* s);
EKB_API const char* ekb_version(void);

/* ---- polynomials ------------------------------------------------------ */

/* "a_0,...,a_n", "[a_0, ...]" or {"coeffs": [...]} */
EKB_API ekb_status ekb_polynomial_parse(const char* text, ekb_polynomial** out);
EKB_API ekb_status ekb_polynomial_create(const double* coeffs, size_t count,
                                         ekb_polynomial** out);
EKB_API void ekb_polynomial_destroy(ekb_polynomial* p);
EKB_API size_t ekb_polynomial_degree(const ekb_polynomial* p);
/* Copies a_0..a_n into `out`; `capacity` must be >= degree + 1. */
EKB_API ekb_status ekb_polynomial_coeffs(const ekb_polynomial* p, double* out, size_t capacity);
EKB_API ekb_status ekb_polynomial_serialize(const ekb_polynomial* p, char** out);
EKB_API ekb_status ekb_polynomial_eval(const ekb_polynomial* p, double re, double im,
                                       double* out_re, double* out_im);
/* (1 - z) p(z) as a new polynomial */
EKB_API ekb_status ekb_polynomial_one_minus_z(const ekb_polynomial* p, ekb_polynomial** out);

/* ---- theorems --------------------------------------------------------- */

/* "a", "b", "c", "d", "e", "cor1", "t1", "t2", "t3" */
EKB_API ekb_status ekb_theorem_parse(const char* id, ekb_theorem* out);
EKB_API const char* ekb_theorem_name(ekb_theorem theorem);
EKB_API void ekb_params_init(ekb_params* params, ekb_theorem theorem);

EKB_API ekb_status ekb_check_hypothesis(const ekb_polynomial* p, const ekb_params* params,
                                        double chain_tol, int* holds);
EKB_API ekb_status ekb_compute_disk(const ekb_polynomial* p, const ekb_params* params,
                                    double chain_tol, ekb_disk* out);
/* Chooses parameters (optimized for T1/T2/T3). EKB_INFEASIBLE if the theorem
 * cannot be applied to p. */
EKB_API ekb_status ekb_auto_params(const ekb_polynomial* p, ekb_theorem theorem,
                                   double chain_tol, ekb_params* out_params, ekb_disk* out_disk);
/* Writes up to `capacity` lambdas; *count receives the full count. */
EKB_API ekb_status ekb_feasible_lambdas(const ekb_polynomial* p, double chain_tol, int* out,
                                        size_t capacity, size_t* count);
/* |center| + radius */
EKB_API double ekb_disk_quality(const ekb_disk* d);

/* ---- roots ------------------------------------------------------------ */

EKB_API void ekb_solver_options_init(ekb_solver_options* options);
/* On EKB_NOT_CONVERGED *out still receives the best iterate. */
EKB_API ekb_status ekb_find_roots(const ekb_polynomial* p, const ekb_solver_options* options,
                                  ekb_rootset** out);
EKB_API void ekb_rootset_destroy(ekb_rootset* rs);
EKB_API size_t ekb_rootset_size(const ekb_rootset* rs);
EKB_API ekb_status ekb_rootset_root(const ekb_rootset* rs, size_t i, double* re, double* im);
EKB_API ekb_status ekb_rootset_residual(const ekb_rootset* rs, size_t i, double* residual);
EKB_API int ekb_rootset_converged(const ekb_rootset* rs);
EKB_API int ekb_rootset_iterations(const ekb_rootset* rs);
EKB_API ekb_status ekb_rootset_json(const ekb_rootset* rs, char** out);
EKB_API ekb_status ekb_containment_check(const ekb_rootset* rs, const ekb_disk* d,
                                         double rel_tol, double abs_tol, ekb_containment* out,
                                         double* excess);
EKB_API ekb_status ekb_tightness(const ekb_rootset* rs, const ekb_disk* d, double* out);

/* ---- reports ---------------------------------------------------------- */

typedef struct ekb_report_request {
  /* NULL: every applicable theorem with automatically chosen parameters */
  const ekb_params* selection;
  /* with a selection: ignore its parameter fields and choose them */
  int optimize;
  /* compute roots and fill containment/tightness */
  int verify;
  double chain_tol;
  ekb_solver_options solver;
} ekb_report_request;

typedef struct ekb_report_counts {
  size_t entries;
  size_t contained;
  size_t failed;
  size_t failed_flagged; /* failed with a_n < 0 */
  size_t inconclusive;
  size_t unchecked;
  int has_best;
  size_t best;
} ekb_report_counts;

EKB_API void ekb_report_request_init(ekb_report_request* request);
/* With a selection: EKB_HYPOTHESIS_VIOLATED / EKB_BAD_PARAM for explicit
 * parameters, EKB_INFEASIBLE when optimize finds nothing applicable. */
EKB_API ekb_status ekb_report_build(const ekb_polynomial* p, const ekb_report_request* request,
                                    ekb_report** out);
EKB_API void ekb_report_destroy(ekb_report* report);
EKB_API ekb_status ekb_report_counts_get(const ekb_report* report, ekb_report_counts* out);
EKB_API ekb_status ekb_report_json(const ekb_report* report, char** out);
EKB_API ekb_status ekb_report_write_svg(const ekb_report* report, const char* path);

/* {"error": {"code": ..., "message": ...}} */
EKB_API ekb_status ekb_error_json(ekb_status status, const char* message, char** out);

/* ---- fuzzing ---------------------------------------------------------- */

typedef struct ekb_fuzz_config {
  ekb_theorem theorem;
  uint64_t count;
  int min_degree;
  int max_degree;
  double scale;
  uint64_t seed;
  ekb_leading_sign leading;
  ekb_solver_options solver;
} ekb_fuzz_config;

typedef struct ekb_fuzz_counts {
  uint64_t passed;
  uint64_t failed;
  uint64_t failed_flagged;
  uint64_t inconclusive;
} ekb_fuzz_counts;

EKB_API void ekb_fuzz_config_init(ekb_fuzz_config* config);
EKB_API ekb_status ekb_fuzz_run(const ekb_fuzz_config* config, char** out_json,
                                ekb_fuzz_counts* out_counts);

#ifdef __cplusplus
}
#endif

#endif /* EKBOUND_EKBOUND_H */
