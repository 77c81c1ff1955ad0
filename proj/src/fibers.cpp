// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/fibers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

#include "biham/error.hpp"

namespace biham::fibers {
namespace {

double zero_sign(double v) { return v == 0.0 ? 0.0 : v; }

bool on_fiber(const State& s, double h, double c) {
  return std::fabs(dynamics::hamiltonian(s) - h) <= kFiberResidualTol &&
         std::fabs(dynamics::casimir(s) - c) <= kFiberResidualTol;
}

std::vector<State> filter_on_fiber(std::vector<State> pts, double h, double c) {
  std::erase_if(pts, [&](const State& s) { return !on_fiber(s, h, c); });
  return pts;
}

std::array<State, 4> saddle_points(double c) {
  const double r = std::sqrt(std::fmax(c, 0.0));
  // Cycle order: E4(r,r) -> E5(r,-r) -> E4(-r,-r) -> E5(-r,r).
  return {State{r, r, 0.0}, State{r, -r, 0.0}, State{-r, -r, 0.0}, State{-r, r, 0.0}};
}

// Closeness is measured componentwise (max-norm).
std::pair<State, double> nearest(const std::array<State, 4>& targets, const State& s) {
  State best = targets[0];
  double best_d = max_abs(s - best);
  for (const auto& t : targets) {
    const double d = max_abs(s - t);
    if (d < best_d) {
      best = t;
      best_d = d;
    }
  }
  return {best, best_d};
}

}  // namespace

std::vector<State> solve_initial_condition(double h, double c, double z_fixed) {
  if (!std::isfinite(h) || !std::isfinite(c) || !std::isfinite(z_fixed)) {
    throw InvalidArgument("fiber target and z must be finite");
  }
  const double z2 = z_fixed * z_fixed;
  const double eps = 1e-12 * std::max({1.0, std::fabs(h), std::fabs(c), z2});

  // x^2 + y^2 = sum, x^4 + y^4 = quartic, x^2 y^2 = prod.
  double sum = 2.0 * c - z2;
  if (sum < -eps) return {};
  sum = std::fmax(sum, 0.0);
  const double quartic = 4.0 * h + 2.0 * z2;
  if (quartic < -eps) return {};
  double prod = 0.5 * (sum * sum - quartic);
  if (prod < -eps) return {};
  prod = std::fmax(prod, 0.0);
  double disc = sum * sum - 4.0 * prod;
  if (disc < -eps) return {};
  disc = std::fmax(disc, 0.0);

  const double big = 0.5 * (sum + std::sqrt(disc));
  const double small = big > 0.0 ? std::fmax(prod / big, 0.0) : 0.0;
  const double a = std::sqrt(big);
  const double b = std::sqrt(small);

  std::vector<State> out;
  for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
    for (double su : {-1.0, 1.0})
      for (double sv : {-1.0, 1.0}) out.push_back({zero_sign(su * u), zero_sign(sv * v), z_fixed});
  }
  std::sort(out.begin(), out.end(), [](const State& l, const State& r) {
    if (l.x != r.x) return l.x < r.x;
    if (l.y != r.y) return l.y < r.y;
    return l.z < r.z;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiberSpec FiberSpec::make(const EcPoint& target, double tol) { return {target, ecmap::classify(target, tol), tol}; }

std::string_view fiber_kind_name(FiberKind k) {
  switch (k) {
    case FiberKind::FinitePointSet: return "FinitePointSet";
    case FiberKind::PeriodicOrbitFamily: return "PeriodicOrbitFamily";
    case FiberKind::HeteroclinicWeb: return "HeteroclinicWeb";
    case FiberKind::Empty: return "Empty";
  }
  return "Empty";
}

std::vector<State> sweep_fiber(double h, double c, int samples) {
  if (samples < 2) throw InvalidArgument("fiber sweep needs at least two samples");
  if (!(c >= 0.0)) return {};
  const double zmax = std::sqrt(2.0 * c);
  std::vector<State> out;
  const int last = samples - 1;
  for (int i = 0; i < samples; ++i) {
    const double z = zmax * static_cast<double>(2 * i - last) / static_cast<double>(last);
    for (const auto& s : solve_initial_condition(h, c, z)) out.push_back(s);
  }
  return filter_on_fiber(std::move(out), h, c);
}

std::optional<State> find_fiber_point(double h, double c) {
  if (!std::isfinite(h) || !std::isfinite(c) || c < 0.0) return std::nullopt;
  // With w = z^2, s = 2c - w and q = 4h + 2w, a point exists iff
  // 0 <= w <= 2c and q <= s^2 <= 2q. The boundaries of the last two
  // conditions are the roots below, so feasibility only changes there.
  std::vector<double> ws = {0.0, 2.0 * c};
  for (auto [centre, disc] : {std::pair{2.0 * c + 1.0, 4.0 * c + 1.0 + 4.0 * h},
                              std::pair{2.0 * c + 2.0, 8.0 * c + 4.0 + 8.0 * h}}) {
    if (disc < 0.0) continue;
    for (double w : {centre - std::sqrt(disc), centre + std::sqrt(disc)})
      if (w > 0.0 && w < 2.0 * c) ws.push_back(w);
  }
  std::sort(ws.begin(), ws.end());
  // Interior points of each interval first, then the breakpoints.
  std::vector<double> candidates;
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) candidates.push_back(0.5 * (ws[i] + ws[i + 1]));
  candidates.insert(candidates.end(), ws.begin(), ws.end());
  for (double w : candidates) {
    const auto pts = filter_on_fiber(solve_initial_condition(h, c, std::sqrt(w)), h, c);
    if (!pts.empty()) return pts.back();
  }
  return std::nullopt;
}

FiberDescription describe_fiber(const FiberSpec& spec, int z_samples) {
  using ecmap::RegionLabel;
  const RegionLabel label = ecmap::classify(spec.target, spec.tol);
  if (label != spec.label) {
    throw InvalidArgument("fiber label " + std::string(ecmap::label_name(spec.label)) + " does not match target (" +
                          std::string(ecmap::label_name(label)) + ")");
  }
  const double h = spec.target.h;
  const double c = spec.target.c;
  const double r = std::sqrt(std::fmax(2.0 * c, 0.0));

  FiberDescription d;
  d.label = label;
  switch (label) {
    case RegionLabel::Sigma12s:
      d.kind = FiberKind::FinitePointSet;
      d.points = {{-r, 0.0, 0.0}, {0.0, -r, 0.0}, {0.0, r, 0.0}, {r, 0.0, 0.0}};
      break;
    case RegionLabel::Sigma3s:
      d.kind = FiberKind::FinitePointSet;
      d.points = {{0.0, 0.0, -r}, {0.0, 0.0, r}};
      break;
    case RegionLabel::BifurcationPoint:
      d.kind = FiberKind::FinitePointSet;
      d.points = {{0.0, 0.0, 0.0}};
      break;
    case RegionLabel::SigmaP1:
      d.kind = FiberKind::PeriodicOrbitFamily;
      d.count_hint = 4;
      break;
    case RegionLabel::SigmaP2:
      d.kind = FiberKind::PeriodicOrbitFamily;
      d.count_hint = 2;
      break;
    case RegionLabel::Sigma45u:
      d.kind = FiberKind::HeteroclinicWeb;
      break;
    case RegionLabel::Outside:
      d.kind = FiberKind::Empty;
      return d;
  }
  d.witness_points = d.kind == FiberKind::FinitePointSet ? filter_on_fiber(d.points, h, c)
                                                         : sweep_fiber(h, c, std::max(z_samples, 2));
  return d;
}

HeteroclinicRun run_from(const State& start, double dt, std::size_t steps, double newton_tol) {
  integrator::IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.newton_tol = newton_tol;
  cfg.max_steps = steps;

  HeteroclinicRun run;
  run.start = start;
  run.dt = dt;
  run.steps = steps;
  run.forward = integrator::integrate(start, cfg);
  cfg.dt = -dt;
  run.backward = integrator::integrate(start, cfg);
  run.forward_end = run.forward.final_state();
  run.backward_end = run.backward.final_state();

  const auto targets = saddle_points(dynamics::casimir(start));
  std::tie(run.forward_target, run.forward_distance) = nearest(targets, run.forward_end);
  std::tie(run.backward_target, run.backward_distance) = nearest(targets, run.backward_end);
  run.max_c_deviation = std::fmax(run.forward.max_abs_c_drift(), run.backward.max_abs_c_drift());
  run.max_h_deviation = std::fmax(run.forward.max_abs_h_drift(), run.backward.max_abs_h_drift());
  return run;
}

HeteroclinicRun run_heteroclinic_experiment(double h, double z_seed, double dt, std::size_t steps,
                                            std::size_t solution_index, double newton_tol) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("heteroclinic fibers need h > 0");
  const double c = std::sqrt(2.0 * h);
  const auto sols = solve_initial_condition(h, c, z_seed);
  if (sols.empty()) throw NoSolutions("no fiber point at the requested z");
  if (solution_index >= sols.size()) {
    throw NoSolutions("solution index " + std::to_string(solution_index) + " out of range (" +
                      std::to_string(sols.size()) + " solutions)");
  }
  return run_from(sols[solution_index], dt, steps, newton_tol);
}

HeteroclinicWeb generate_heteroclinic_web(double h, double dt, std::size_t steps, std::optional<double> z_seed,
                                          double newton_tol) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("heteroclinic fibers need h > 0");
  const double c = std::sqrt(2.0 * h);
  const auto sols = solve_initial_condition(h, c, z_seed.value_or(0.5 * c));
  if (sols.empty()) throw NoSolutions("no fiber point at the requested z");
  const State base = sols.back();

  // Identity, the five maps, and every composition of two of them.
  std::vector<State> starts{base};
  auto add = [&](const State& s) {
    for (const auto& t : starts)
      if (norm(t - s) <= 1e-12) return;
    starts.push_back(s);
  };
  for (auto t : dynamics::kSymmetries) add(dynamics::apply_symmetry(t, base));
  for (auto t1 : dynamics::kSymmetries)
    for (auto t2 : dynamics::kSymmetries) add(dynamics::apply_symmetry(t2, dynamics::apply_symmetry(t1, base)));

  std::vector<std::future<HeteroclinicRun>> jobs;
  jobs.reserve(starts.size());
  for (const auto& s : starts) jobs.push_back(std::async(std::launch::async, run_from, s, dt, steps, newton_tol));

  HeteroclinicWeb web;
  web.h = h;
  web.c = c;
  for (auto& j : jobs) web.runs.push_back(j.get());

  const auto verts = saddle_points(c);
  for (bool reversed : {false, true}) {
    HeteroclinicCycle cycle;
    for (std::size_t i = 0; i < verts.size(); ++i) cycle.vertices.push_back(verts[reversed ? (4 - i) % 4 : i]);
    cycle.closed = true;
    for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
      const State& from = cycle.vertices[i];
      const State& to = cycle.vertices[(i + 1) % cycle.vertices.size()];
      int found = -1;
      for (std::size_t k = 0; k < web.runs.size(); ++k) {
        const auto& r = web.runs[k];
        if (max_abs(r.backward_target - from) <= 1e-9 && max_abs(r.forward_target - to) <= 1e-9 && r.backward_distance <= kEndpointTol &&
            r.forward_distance <= kEndpointTol) {
          found = static_cast<int>(k);
          break;
        }
      }
      cycle.edge_runs.push_back(found);
      cycle.closed = cycle.closed && found >= 0;
    }
    web.cycles.push_back(std::move(cycle));
  }
  return web;
}

}  // namespace biham::fibers
