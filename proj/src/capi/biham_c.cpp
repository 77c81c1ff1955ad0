// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/biham.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "biham/dynamics.hpp"
#include "biham/ecmap.hpp"
#include "biham/error.hpp"
#include "biham/fibers.hpp"
#include "biham/integrator.hpp"
#include "biham/io.hpp"
#include "biham/stability.hpp"

struct biham_text {
  std::string data;
};

struct biham_trajectory {
  biham::integrator::Trajectory value;
};

struct biham_web {
  biham::fibers::HeteroclinicWeb value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_step = 0;

biham::State to_cpp(biham_state s) { return {s.x, s.y, s.z}; }
biham_state to_c(const biham::State& s) { return {s.x, s.y, s.z}; }

biham_status fail(biham_status code, const char* msg) {
  last_error = msg;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
biham_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return BIHAM_OK;
  } catch (const biham::NonConvergence& e) {
    last_error_step = e.step_index();
    return fail(BIHAM_ERR_NON_CONVERGENCE, e.what());
  } catch (const biham::InvalidArgument& e) {
    return fail(BIHAM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const biham::WrongFamily& e) {
    return fail(BIHAM_ERR_WRONG_FAMILY, e.what());
  } catch (const biham::NoMultiplier& e) {
    return fail(BIHAM_ERR_NO_MULTIPLIER, e.what());
  } catch (const biham::NoSolutions& e) {
    return fail(BIHAM_ERR_NO_SOLUTIONS, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BIHAM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BIHAM_ERR_INTERNAL, e.what());
  }
}

bool valid_family(biham_family f) { return f >= BIHAM_E1 && f <= BIHAM_E5; }

biham::ecmap::EquilibriumFamily to_cpp(biham_family f, double m) {
  return {static_cast<biham::ecmap::Family>(f), m};
}

biham::integrator::IntegratorConfig to_cpp(const biham_integrator_config& c) {
  biham::integrator::IntegratorConfig cfg;
  cfg.dt = c.dt;
  cfg.newton_tol = c.newton_tol;
  cfg.max_inner_iters = c.max_inner_iters;
  cfg.max_steps = c.max_steps;
  cfg.solver = c.use_picard ? biham::integrator::InnerSolver::Picard : biham::integrator::InnerSolver::Newton;
  return cfg;
}

void fill_verdict(const biham::stability::StabilityVerdict& v, biham_verdict* out) {
  out->family = static_cast<biham_family>(v.family.family);
  out->m = v.family.m;
  out->verdict = static_cast<biham_verdict_kind>(v.verdict);
  out->certificate = static_cast<biham_certificate>(v.certificate);
  for (int i = 0; i < 3; ++i) {
    out->spectrum_re[i] = v.spectrum[static_cast<std::size_t>(i)].real();
    out->spectrum_im[i] = v.spectrum[static_cast<std::size_t>(i)].imag();
  }
  out->multiplier = v.multiplier;
  out->restricted_eigenvalues[0] = v.restricted_eigenvalues[0];
  out->restricted_eigenvalues[1] = v.restricted_eigenvalues[1];
}

void fill_run(const biham::fibers::HeteroclinicRun& r, biham_run_summary* out) {
  out->start = to_c(r.start);
  out->forward_end = to_c(r.forward_end);
  out->backward_end = to_c(r.backward_end);
  out->forward_target = to_c(r.forward_target);
  out->backward_target = to_c(r.backward_target);
  out->forward_distance = r.forward_distance;
  out->backward_distance = r.backward_distance;
  out->max_c_deviation = r.max_c_deviation;
  out->max_h_deviation = r.max_h_deviation;
}

biham::io::Format to_cpp(biham_format f) {
  return f == BIHAM_FORMAT_JSON ? biham::io::Format::Json : biham::io::Format::Csv;
}

}  // namespace

extern "C" {

const char* biham_version(void) { return "1.0.0"; }
const char* biham_last_error(void) { return last_error.c_str(); }
size_t biham_last_error_step(void) { return last_error_step; }

const char* biham_text_data(const biham_text* t) { return t ? t->data.c_str() : ""; }
size_t biham_text_size(const biham_text* t) { return t ? t->data.size() : 0; }
void biham_text_free(biham_text* t) { delete t; }

double biham_hamiltonian(biham_state s) { return biham::dynamics::hamiltonian(to_cpp(s)); }
double biham_casimir(biham_state s) { return biham::dynamics::casimir(to_cpp(s)); }
biham_state biham_vector_field(biham_state s) { return to_c(biham::dynamics::vector_field(to_cpp(s))); }

void biham_jacobian(biham_state s, double out[9]) {
  const auto j = biham::dynamics::jacobian(to_cpp(s));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r * 3 + c] = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

biham_status biham_apply_symmetry(biham_symmetry t, biham_state s, biham_state* out) {
  if (!out || t < BIHAM_NEGATE_XY || t > BIHAM_ROTATE_CW) {
    return fail(BIHAM_ERR_INVALID_ARGUMENT, "invalid symmetry or null output");
  }
  *out = to_c(biham::dynamics::apply_symmetry(static_cast<biham::dynamics::Symmetry>(t), to_cpp(s)));
  last_error.clear();
  return BIHAM_OK;
}

int biham_in_image(double h, double c) { return biham::ecmap::in_image({h, c}) ? 1 : 0; }

biham_label biham_classify(double h, double c, double tol) {
  return static_cast<biham_label>(biham::ecmap::classify({h, c}, tol));
}

const char* biham_label_name(biham_label l) {
  if (l < BIHAM_SIGMA12S || l > BIHAM_OUTSIDE) return "Outside";
  return biham::ecmap::label_name(static_cast<biham::ecmap::RegionLabel>(l)).data();
}

int biham_rank_dec(biham_state s, double tol) { return biham::ecmap::rank_dec(to_cpp(s), tol); }

biham_state biham_realize(biham_family f, double m) {
  if (!valid_family(f)) return {0.0, 0.0, 0.0};
  return to_c(biham::ecmap::realize(to_cpp(f, m)));
}

biham_status biham_scan_image(const biham_scan_range* range, biham_text** out) {
  if (!range || !out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    biham::ecmap::ScanRange r{range->h_min, range->h_max, range->c_min, range->c_max, range->resolution, range->tol};
    *out = new biham_text{biham::io::scan_csv(biham::ecmap::scan_image(r))};
  });
}

void biham_integrator_config_default(biham_integrator_config* cfg) {
  if (!cfg) return;
  const biham::integrator::IntegratorConfig d;
  *cfg = {d.dt, d.newton_tol, d.max_inner_iters, d.max_steps, 0};
}

biham_status biham_midpoint_step(biham_state s, const biham_integrator_config* cfg, biham_state* out) {
  if (!cfg || !out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = to_c(biham::integrator::midpoint_step(to_cpp(s), to_cpp(*cfg))); });
}

biham_status biham_integrate(biham_state s0, const biham_integrator_config* cfg, biham_trajectory** out) {
  if (!cfg || !out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new biham_trajectory{biham::integrator::integrate(to_cpp(s0), to_cpp(*cfg))}; });
}

size_t biham_trajectory_size(const biham_trajectory* t) { return t ? t->value.samples.size() : 0; }

biham_status biham_trajectory_sample(const biham_trajectory* t, size_t i, biham_sample* out) {
  if (!t || !out || i >= t->value.samples.size()) return fail(BIHAM_ERR_INVALID_ARGUMENT, "bad sample request");
  const auto& r = t->value.samples[i];
  *out = {r.step, r.t, to_c(r.state), r.h_drift, r.c_drift};
  last_error.clear();
  return BIHAM_OK;
}

biham_status biham_trajectory_serialize(const biham_trajectory* t, biham_format f, biham_text** out) {
  if (!t || !out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new biham_text{biham::io::trajectory_to_string(t->value, to_cpp(f))}; });
}

void biham_trajectory_free(biham_trajectory* t) { delete t; }

biham_status biham_classify_equilibrium(biham_family f, double m, biham_verdict* out) {
  if (!out || !valid_family(f)) return fail(BIHAM_ERR_INVALID_ARGUMENT, "invalid family or null output");
  return guarded([&] { fill_verdict(biham::stability::classify_equilibrium(to_cpp(f, m)), out); });
}

biham_status biham_arnold_test(biham_family f, double m, biham_verdict* out) {
  if (!out || !valid_family(f)) return fail(BIHAM_ERR_INVALID_ARGUMENT, "invalid family or null output");
  return guarded([&] { fill_verdict(biham::stability::arnold_test(to_cpp(f, m)), out); });
}

const char* biham_verdict_name(biham_verdict_kind v) {
  if (v < BIHAM_NONLINEARLY_STABLE || v > BIHAM_DEGENERATE) return "Degenerate";
  return biham::stability::verdict_name(static_cast<biham::stability::Verdict>(v)).data();
}

const char* biham_certificate_name(biham_certificate c) {
  if (c < BIHAM_CERT_POSITIVE_REAL_EIGENVALUE || c > BIHAM_CERT_NONE) return "none";
  return biham::stability::certificate_name(static_cast<biham::stability::Certificate>(c)).data();
}

biham_status biham_predicted_period(biham_family f, double m, double* out) {
  if (!out || !valid_family(f)) return fail(BIHAM_ERR_INVALID_ARGUMENT, "invalid family or null output");
  return guarded([&] { *out = biham::stability::predicted_period(to_cpp(f, m)); });
}

biham_status biham_first_return(biham_state s0, biham_state normal, double dt, double t_max, double newton_tol,
                                biham_return* out) {
  if (!out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const auto r = biham::stability::first_return(to_cpp(s0), to_cpp(normal), dt, t_max, newton_tol);
    *out = {r.found ? 1 : 0, r.period, r.return_distance};
  });
}

biham_status biham_solve_initial_condition(double h, double c, double z, biham_state* out, size_t cap,
                                           size_t* count) {
  if (!count || (cap > 0 && !out)) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto sols = biham::fibers::solve_initial_condition(h, c, z);
    *count = sols.size();
    for (std::size_t i = 0; i < sols.size() && i < cap; ++i) out[i] = to_c(sols[i]);
  });
}

biham_status biham_describe_fiber(double h, double c, double tol, biham_text** out) {
  if (!out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const auto spec = biham::fibers::FiberSpec::make({h, c}, tol);
    *out = new biham_text{biham::io::fiber_json(biham::fibers::describe_fiber(spec), {h, c})};
  });
}

biham_status biham_heteroclinic_run(double h, double z_seed, double dt, size_t steps, size_t solution_index,
                                    biham_run_summary* out) {
  if (!out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null output");
  return guarded(
      [&] { fill_run(biham::fibers::run_heteroclinic_experiment(h, z_seed, dt, steps, solution_index), out); });
}

biham_status biham_web_generate(double h, double dt, size_t steps, double z_seed, double newton_tol,
                                biham_web** out) {
  if (!out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    std::optional<double> z;
    if (!std::isnan(z_seed)) z = z_seed;
    *out = new biham_web{biham::fibers::generate_heteroclinic_web(h, dt, steps, z, newton_tol)};
  });
}

size_t biham_web_run_count(const biham_web* w) { return w ? w->value.runs.size() : 0; }

biham_status biham_web_run(const biham_web* w, size_t i, biham_run_summary* out) {
  if (!w || !out || i >= w->value.runs.size()) return fail(BIHAM_ERR_INVALID_ARGUMENT, "bad run request");
  fill_run(w->value.runs[i], out);
  last_error.clear();
  return BIHAM_OK;
}

size_t biham_web_cycle_count(const biham_web* w) { return w ? w->value.cycles.size() : 0; }

int biham_web_cycle_closed(const biham_web* w, size_t i) {
  return (w && i < w->value.cycles.size() && w->value.cycles[i].closed) ? 1 : 0;
}

biham_status biham_web_serialize(const biham_web* w, biham_text** out) {
  if (!w || !out) return fail(BIHAM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new biham_text{biham::io::web_json(w->value)}; });
}

biham_status biham_web_run_trajectory(const biham_web* w, size_t i, int backward, biham_format f,
                                      biham_text** out) {
  if (!w || !out || i >= w->value.runs.size()) return fail(BIHAM_ERR_INVALID_ARGUMENT, "bad run request");
  return guarded([&] {
    const auto& run = w->value.runs[i];
    *out = new biham_text{biham::io::trajectory_to_string(backward ? run.backward : run.forward, to_cpp(f))};
  });
}

void biham_web_free(biham_web* w) { delete w; }

}  // extern "C"
