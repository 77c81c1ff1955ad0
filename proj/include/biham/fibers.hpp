// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "biham/dynamics.hpp"
#include "biham/ecmap.hpp"
#include "biham/integrator.hpp"

namespace biham::fibers {

// All real points (x, y, z_fixed) with H = h and C = c, sorted
// lexicographically with duplicates removed. Empty when infeasible.
std::vector<State> solve_initial_condition(double h, double c, double z_fixed);

struct FiberSpec {
  EcPoint target;
  ecmap::RegionLabel label = ecmap::RegionLabel::Outside;
  double tol = ecmap::kDefaultTol;

  static FiberSpec make(const EcPoint& target, double tol = ecmap::kDefaultTol);
};

enum class FiberKind { FinitePointSet, PeriodicOrbitFamily, HeteroclinicWeb, Empty };
std::string_view fiber_kind_name(FiberKind k);

inline constexpr double kFiberResidualTol = 1e-9;

struct FiberDescription {
  FiberKind kind = FiberKind::Empty;
  ecmap::RegionLabel label = ecmap::RegionLabel::Outside;
  // Descriptive number of orbit families (4 on SigmaP1, 2 on SigmaP2).
  int count_hint = 0;
  // The whole fiber, for FinitePointSet.
  std::vector<State> points;
  // Sampled fiber points; each satisfies |H-h|, |C-c| <= kFiberResidualTol.
  std::vector<State> witness_points;
};

// Throws InvalidArgument if spec.label disagrees with the classification of
// spec.target.
FiberDescription describe_fiber(const FiberSpec& spec, int z_samples = 64);

// Every solution over `samples` evenly spaced z in [-sqrt(2c), sqrt(2c)],
// endpoints included.
std::vector<State> sweep_fiber(double h, double c, int samples);

// Some point of the fiber with z >= 0, or nullopt when the fiber is empty.
std::optional<State> find_fiber_point(double h, double c);

struct HeteroclinicRun {
  State start;
  State forward_end;
  State backward_end;
  State forward_target;
  State backward_target;
  // Max-norm distances from the endpoints to their targets.
  double forward_distance = 0.0;
  double backward_distance = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  double max_c_deviation = 0.0;  // over both trajectories, relative to C(start)
  double max_h_deviation = 0.0;
  integrator::Trajectory forward;
  integrator::Trajectory backward;
};

inline constexpr double kEndpointTol = 5e-3;

// Integrates `steps` steps with +dt and with -dt from `start` and attaches
// the nearest E4/E5 points on the fiber's Casimir level as targets.
HeteroclinicRun run_from(const State& start, double dt, std::size_t steps, double newton_tol = 1e-12);

// Picks solution `solution_index` of solve_initial_condition(h, sqrt(2h),
// z_seed) and calls run_from. Throws InvalidArgument for h <= 0,
// NoSolutions for an empty or too short solution list.
HeteroclinicRun run_heteroclinic_experiment(double h, double z_seed, double dt, std::size_t steps,
                                            std::size_t solution_index, double newton_tol = 1e-12);

// An ordered loop of E4/E5 points and, per edge, the index of the run
// leaving from one vertex and arriving at the next (or -1).
struct HeteroclinicCycle {
  std::vector<State> vertices;
  std::vector<int> edge_runs;
  bool closed = false;
};

struct HeteroclinicWeb {
  double h = 0.0;
  double c = 0.0;
  std::vector<HeteroclinicRun> runs;
  std::vector<HeteroclinicCycle> cycles;
};

// Base run from the last (largest x) solution at z_seed, then one run per
// distinct image of its start under the symmetry maps and their pairwise
// compositions; eight runs in total. Cycles are checked in both orientations
// of E4(r,r) -> E5(r,-r) -> E4(-r,-r) -> E5(-r,r) with r = sqrt(c).
// z_seed defaults to c/2.
HeteroclinicWeb generate_heteroclinic_web(double h, double dt, std::size_t steps,
                                          std::optional<double> z_seed = std::nullopt,
                                          double newton_tol = 1e-12);

}  // namespace biham::fibers
