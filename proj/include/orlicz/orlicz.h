/*
 * Copyright (c) 2026 The orlicz Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORLICZ_ORLICZ_H_
#define ORLICZ_ORLICZ_H_

#include <stdint.h>

#if defined(_WIN32)
#if defined(ORLICZ_BUILDING_LIBRARY)
#define ORLICZ_API __declspec(dllexport)
#else
#define ORLICZ_API __declspec(dllimport)
#endif
#else
#define ORLICZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Every fallible call returns an orlicz_status. On failure the thread-local
 * message from orlicz_last_error() describes it; outputs are left untouched.
 * Strings returned through char** are owned by the caller and released with
 * orlicz_string_free.
 */
typedef enum orlicz_status {
  ORLICZ_OK = 0,
  ORLICZ_ERR_DOMAIN = 1,       /* argument outside the operation's domain */
  ORLICZ_ERR_CONSTRUCTION = 2, /* invalid Orlicz function */
  ORLICZ_ERR_SHAPE = 3,        /* block count or dimensions disagree */
  ORLICZ_ERR_NON_FINITE = 4,
  ORLICZ_ERR_VALIDATION = 5, /* input violates a documented invariant */
  ORLICZ_ERR_REFUSED = 6,    /* precondition gate, e.g. Delta2 */
  ORLICZ_ERR_PARSE = 7,      /* spec string, JSON or schema */
  ORLICZ_ERR_NUMERIC = 8,    /* search did not converge or overflowed */
  ORLICZ_ERR_NULL_ARGUMENT = 9,
  ORLICZ_ERR_NOT_FOUND = 10, /* unknown element name or suite */
  ORLICZ_ERR_INTERNAL = 11
} orlicz_status;

typedef struct orlicz_function_t* orlicz_function;
typedef struct orlicz_workspace_t* orlicz_workspace;
/* A matrix element or a spectral profile. */
typedef struct orlicz_element_t* orlicz_element;

typedef enum orlicz_norm_method {
  ORLICZ_NORM_CLOSED_FORM = 0,
  ORLICZ_NORM_BISECTION = 1,
  ORLICZ_NORM_AMEMIYA = 2,
  ORLICZ_NORM_DUAL_BRUTEFORCE = 3
} orlicz_norm_method;

typedef struct orlicz_norm_result {
  double value;
  orlicz_norm_method method;
  int iterations;
  double residual;
} orlicz_norm_result;

typedef struct orlicz_delta2_options {
  double u_min;
  double u_max;
  int grid_size;
  double unbounded_threshold;
} orlicz_delta2_options;

ORLICZ_API const char* orlicz_version(void);
ORLICZ_API const char* orlicz_status_string(orlicz_status status);
ORLICZ_API const char* orlicz_last_error(void);
ORLICZ_API void orlicz_string_free(char* s);

/* Orlicz functions: "power:p=2[,c=1]", "exp", "pwl:t0:s0[:v0],...", "legendre(<spec>)". */
ORLICZ_API orlicz_status orlicz_function_parse(const char* spec, orlicz_function* out);
ORLICZ_API void orlicz_function_free(orlicz_function f);
ORLICZ_API orlicz_status orlicz_function_spec(orlicz_function f, char** out);
ORLICZ_API orlicz_status orlicz_phi_eval(orlicz_function f, double u, double* out);
ORLICZ_API orlicz_status orlicz_density_eval(orlicz_function f, double t, double* out);
/* *closed_form is 1 for the analytic conjugate of a power function. */
ORLICZ_API orlicz_status orlicz_conjugate(orlicz_function f, orlicz_function* out, int* closed_form);
ORLICZ_API orlicz_status orlicz_young_gap(orlicz_function f, double u, double v, double* out);
ORLICZ_API void orlicz_delta2_default_options(orlicz_delta2_options* options);
/* options may be NULL. Writes the verdict as JSON. */
ORLICZ_API orlicz_status orlicz_delta2(orlicz_function f, const orlicz_delta2_options* options, char** json_out,
                                       int* holds);

/* Operator files (JSON text with "v": 1). */
ORLICZ_API orlicz_status orlicz_workspace_load(const char* json_text, orlicz_workspace* out);
ORLICZ_API orlicz_status orlicz_workspace_load_file(const char* path, orlicz_workspace* out);
ORLICZ_API void orlicz_workspace_free(orlicz_workspace ws);
/* Looks the name up among elements, then profiles. */
ORLICZ_API orlicz_status orlicz_workspace_element(orlicz_workspace ws, const char* name, orlicz_element* out);
ORLICZ_API void orlicz_element_free(orlicz_element e);
ORLICZ_API int orlicz_element_is_profile(orlicz_element e);
/* Reloadable document: an operator file with one element, or a profile file. */
ORLICZ_API orlicz_status orlicz_element_to_json(orlicz_element e, const char* name, char** out);

ORLICZ_API orlicz_status orlicz_trace(orlicz_element e, double* re, double* im);
/* Singular value profile as {"v":1,"steps":[...]}. */
ORLICZ_API orlicz_status orlicz_profile_json(orlicz_element e, char** out);
ORLICZ_API orlicz_status orlicz_mu(orlicz_element e, double t, double* out);
ORLICZ_API orlicz_status orlicz_lambda(orlicz_element e, double s, double* out);
ORLICZ_API orlicz_status orlicz_modular(orlicz_function f, orlicz_element e, double* out);
ORLICZ_API orlicz_status orlicz_luxemburg_norm(orlicz_function f, orlicz_element e, double tol, orlicz_norm_result* out);
ORLICZ_API orlicz_status orlicz_orlicz_norm(orlicz_function f, orlicz_element e, double tol, orlicz_norm_result* out);
ORLICZ_API orlicz_status orlicz_norm_result_json(const orlicz_norm_result* r, char** out);
/* Spectral truncation x_n (values of |x| above n removed). */
ORLICZ_API orlicz_status orlicz_truncate(orlicz_element e, double n, orlicz_element* out);
/* Spectral projection e_(s,inf)(|x|); matrix elements only. */
ORLICZ_API orlicz_status orlicz_project(orlicz_element e, double s, orlicz_element* out);

/*
 * Property suites. params_json keys: phi, seed, samples, eps, L, tol,
 * check_tol (all optional, unknown keys rejected). *passed is 1 for a
 * "pass" verdict. The report is JSON.
 */
ORLICZ_API orlicz_status orlicz_verify(const char* suite, const char* params_json, char** report_json, int* passed);
ORLICZ_API orlicz_status orlicz_counterexample_build(orlicz_function f, double epsilon, int atoms, int tail_index,
                                                     char** report_json, int* passed);

/* Re-serializes a JSON report: format is "json", "csv" or "pretty"; kind
 * selects special layouts ("delta2", "norm", "profile"). */
ORLICZ_API orlicz_status orlicz_format_report(const char* kind, const char* json, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ORLICZ_ORLICZ_H_ */
