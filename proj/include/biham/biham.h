/*
 * Copyright 2026 The biham Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the biham library. All functions are thread-safe; the
 * message returned by biham_last_error() is per thread. Objects handed out
 * through opaque pointers are owned by the caller and released with the
 * matching *_free function.
 */
#ifndef BIHAM_BIHAM_H
#define BIHAM_BIHAM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BIHAM_BUILDING_LIBRARY)
#    define BIHAM_API __declspec(dllexport)
#  else
#    define BIHAM_API __declspec(dllimport)
#  endif
#else
#  define BIHAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum biham_status {
  BIHAM_OK = 0,
  BIHAM_ERR_INVALID_ARGUMENT = 1,
  BIHAM_ERR_NON_CONVERGENCE = 2,
  BIHAM_ERR_WRONG_FAMILY = 3,
  BIHAM_ERR_NO_MULTIPLIER = 4,
  BIHAM_ERR_NO_SOLUTIONS = 5,
  BIHAM_ERR_INTERNAL = 6
} biham_status;

typedef struct biham_state {
  double x, y, z;
} biham_state;

typedef enum biham_label {
  BIHAM_SIGMA12S = 0,
  BIHAM_SIGMA3S = 1,
  BIHAM_SIGMA45U = 2,
  BIHAM_SIGMAP1 = 3,
  BIHAM_SIGMAP2 = 4,
  BIHAM_BIFURCATION_POINT = 5,
  BIHAM_OUTSIDE = 6
} biham_label;

typedef enum biham_family { BIHAM_E1 = 0, BIHAM_E2, BIHAM_E3, BIHAM_E4, BIHAM_E5 } biham_family;

typedef enum biham_symmetry {
  BIHAM_NEGATE_XY = 0,
  BIHAM_NEGATE_XZ,
  BIHAM_NEGATE_YZ,
  BIHAM_ROTATE_CCW,
  BIHAM_ROTATE_CW
} biham_symmetry;

typedef enum biham_format { BIHAM_FORMAT_CSV = 0, BIHAM_FORMAT_JSON = 1 } biham_format;

typedef enum biham_verdict_kind {
  BIHAM_NONLINEARLY_STABLE = 0,
  BIHAM_UNSTABLE = 1,
  BIHAM_DEGENERATE = 2
} biham_verdict_kind;

typedef enum biham_certificate {
  BIHAM_CERT_POSITIVE_REAL_EIGENVALUE = 0,
  BIHAM_CERT_ARNOLD_DEFINITE = 1,
  BIHAM_CERT_LYAPUNOV_CASIMIR = 2,
  BIHAM_CERT_NONE = 3
} biham_certificate;

BIHAM_API const char* biham_version(void);

/* Message of the last failed call on this thread ("" after success). */
BIHAM_API const char* biham_last_error(void);
/* Failing step index of the last BIHAM_ERR_NON_CONVERGENCE on this thread. */
BIHAM_API size_t biham_last_error_step(void);

/* ---- text buffers ---------------------------------------------------- */

typedef struct biham_text biham_text;
BIHAM_API const char* biham_text_data(const biham_text* t);
BIHAM_API size_t biham_text_size(const biham_text* t);
BIHAM_API void biham_text_free(biham_text* t);

/* ---- dynamics -------------------------------------------------------- */

BIHAM_API double biham_hamiltonian(biham_state s);
BIHAM_API double biham_casimir(biham_state s);
BIHAM_API biham_state biham_vector_field(biham_state s);
/* Row-major 3x3. */
BIHAM_API void biham_jacobian(biham_state s, double out[9]);
BIHAM_API biham_status biham_apply_symmetry(biham_symmetry t, biham_state s, biham_state* out);

/* ---- energy-Casimir map ---------------------------------------------- */

BIHAM_API int biham_in_image(double h, double c);
BIHAM_API biham_label biham_classify(double h, double c, double tol);
BIHAM_API const char* biham_label_name(biham_label l);
BIHAM_API int biham_rank_dec(biham_state s, double tol);
BIHAM_API biham_state biham_realize(biham_family f, double m);

typedef struct biham_scan_range {
  double h_min, h_max, c_min, c_max;
  int resolution;
  double tol;
} biham_scan_range;

/* CSV with columns h,c,label. */
BIHAM_API biham_status biham_scan_image(const biham_scan_range* range, biham_text** out);

/* ---- integrator ------------------------------------------------------ */

typedef struct biham_integrator_config {
  double dt;
  double newton_tol;
  int max_inner_iters;
  size_t max_steps;
  int use_picard; /* nonzero selects fixed-point iteration */
} biham_integrator_config;

typedef struct biham_sample {
  size_t step;
  double t;
  biham_state state;
  double h_drift;
  double c_drift;
} biham_sample;

typedef struct biham_trajectory biham_trajectory;

/* dt = 0.01, newton_tol = 1e-12, max_inner_iters = 50, max_steps = 1. */
BIHAM_API void biham_integrator_config_default(biham_integrator_config* cfg);
BIHAM_API biham_status biham_midpoint_step(biham_state s, const biham_integrator_config* cfg, biham_state* out);
BIHAM_API biham_status biham_integrate(biham_state s0, const biham_integrator_config* cfg, biham_trajectory** out);
BIHAM_API size_t biham_trajectory_size(const biham_trajectory* t);
BIHAM_API biham_status biham_trajectory_sample(const biham_trajectory* t, size_t i, biham_sample* out);
BIHAM_API biham_status biham_trajectory_serialize(const biham_trajectory* t, biham_format f, biham_text** out);
BIHAM_API void biham_trajectory_free(biham_trajectory* t);

/* ---- stability ------------------------------------------------------- */

typedef struct biham_verdict {
  biham_family family;
  double m;
  biham_verdict_kind verdict;
  biham_certificate certificate;
  double spectrum_re[3];
  double spectrum_im[3];
  double multiplier;
  double restricted_eigenvalues[2];
} biham_verdict;

typedef struct biham_return {
  int found;
  double period;
  double return_distance;
} biham_return;

BIHAM_API biham_status biham_classify_equilibrium(biham_family f, double m, biham_verdict* out);
BIHAM_API biham_status biham_arnold_test(biham_family f, double m, biham_verdict* out);
BIHAM_API const char* biham_verdict_name(biham_verdict_kind v);
BIHAM_API const char* biham_certificate_name(biham_certificate c);
BIHAM_API biham_status biham_predicted_period(biham_family f, double m, double* out);
/* First return to the plane through s0 with the given normal. */
BIHAM_API biham_status biham_first_return(biham_state s0, biham_state normal, double dt, double t_max,
                                          double newton_tol, biham_return* out);

/* ---- fibers ---------------------------------------------------------- */

/* Writes up to cap solutions; *count receives the total number found. */
BIHAM_API biham_status biham_solve_initial_condition(double h, double c, double z, biham_state* out, size_t cap,
                                                     size_t* count);
/* JSON description of the fiber over (h, c). */
BIHAM_API biham_status biham_describe_fiber(double h, double c, double tol, biham_text** out);

typedef struct biham_run_summary {
  biham_state start;
  biham_state forward_end;
  biham_state backward_end;
  biham_state forward_target;
  biham_state backward_target;
  double forward_distance;
  double backward_distance;
  double max_c_deviation;
  double max_h_deviation;
} biham_run_summary;

typedef struct biham_web biham_web;

/* Single run from a solution of the fiber solver at z_seed. */
BIHAM_API biham_status biham_heteroclinic_run(double h, double z_seed, double dt, size_t steps,
                                              size_t solution_index, biham_run_summary* out);
/* Pass NaN as z_seed for the default c/2. */
BIHAM_API biham_status biham_web_generate(double h, double dt, size_t steps, double z_seed, double newton_tol,
                                          biham_web** out);
BIHAM_API size_t biham_web_run_count(const biham_web* w);
BIHAM_API biham_status biham_web_run(const biham_web* w, size_t i, biham_run_summary* out);
BIHAM_API size_t biham_web_cycle_count(const biham_web* w);
BIHAM_API int biham_web_cycle_closed(const biham_web* w, size_t i);
BIHAM_API biham_status biham_web_serialize(const biham_web* w, biham_text** out);
/* Trajectory of run i; backward selects the -dt half. */
BIHAM_API biham_status biham_web_run_trajectory(const biham_web* w, size_t i, int backward, biham_format f,
                                                biham_text** out);
BIHAM_API void biham_web_free(biham_web* w);

#ifdef __cplusplus
}
#endif

#endif /* BIHAM_BIHAM_H */
