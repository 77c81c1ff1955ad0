// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "biham/dynamics.hpp"

namespace biham::integrator {

enum class InnerSolver { Newton, Picard };

struct IntegratorConfig {
  double dt = 0.01;
  double newton_tol = 1e-12;
  int max_inner_iters = 50;
  std::size_t max_steps = 1;
  InnerSolver solver = InnerSolver::Newton;

  // Throws InvalidArgument on dt == 0, non-finite dt, newton_tol <= 0,
  // max_inner_iters < 1 or max_steps < 1.
  void validate() const;
};

// Outcome of one implicit solve.
struct StepResult {
  State next;
  double residual = 0.0;
  int iterations = 0;
};

// Residual of the implicit equation written with the midpoint,
//   (next - prev) - dt * f((prev + next) / 2).
State midpoint_residual(const State& prev, const State& next, double dt);

// The same residual spelled out per component with the 1/16 products of
// the sums x_k + x_{k+1}. Must agree with midpoint_residual to rounding.
State expanded_residual(const State& prev, const State& next, double dt);

// Solves for the next state; throws NonConvergence (step index 0) if the
// residual max-norm stays above cfg.newton_tol.
StepResult solve_step(const State& s, const IntegratorConfig& cfg);

inline State midpoint_step(const State& s, const IntegratorConfig& cfg) { return solve_step(s, cfg).next; }

struct Sample {
  std::size_t step = 0;
  double t = 0.0;
  State state;
  double h_drift = 0.0;
  double c_drift = 0.0;
};

struct Trajectory {
  IntegratorConfig config;
  State initial;
  // Record 0 is the initial state; record k is after k steps.
  std::vector<Sample> samples;

  const State& final_state() const { return samples.back().state; }
  double max_abs_c_drift() const;
  double max_abs_h_drift() const;
};

// Runs cfg.max_steps steps. NonConvergence carries the failing step index.
Trajectory integrate(const State& s0, const IntegratorConfig& cfg);

struct DriftMeasurement {
  double dt = 0.0;
  double h_drift = 0.0;  // |H(t_final) - H(0)|
};

// |H-drift| at t_final for each dt. Each dt must divide t_final into an
// integer number of steps (relative tolerance 1e-9).
std::vector<DriftMeasurement> order_probe(const State& s0, double t_final, std::span<const double> dts,
                                          double newton_tol = 1e-12);

}  // namespace biham::integrator
