// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/integrator.hpp"

#include <cmath>
#include <optional>
#include <utility>

#include "biham/error.hpp"

namespace biham::integrator {
namespace {

// Gaussian elimination with partial pivoting; nullopt when singular.
std::optional<State> solve3(Mat3 a, State rhs) {
  std::array<double, 3> b = {rhs.x, rhs.y, rhs.z};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::array<double, 3> x{};
  for (int r = 2; r >= 0; --r) {
    double sum = b[r];
    for (int k = r + 1; k < 3; ++k) sum -= a[r][k] * x[k];
    x[r] = sum / a[r][r];
  }
  State out{x[0], x[1], x[2]};
  if (!is_finite(out)) return std::nullopt;
  return out;
}

// One Newton update of `next`; false if the iteration matrix is singular.
bool newton_update(const State& s, double dt, State& next, const State& r) {
  const Mat3 jm = dynamics::jacobian(0.5 * (s + next));
  Mat3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - 0.5 * dt * jm[i][j];
  const auto delta = solve3(a, r);
  if (!delta) return false;
  next = next - *delta;
  return true;
}

StepResult solve_newton(const State& s, const IntegratorConfig& cfg) {
  const double dt = cfg.dt;
  State next = s + dt * dynamics::vector_field(s);
  State r = midpoint_residual(s, next, dt);
  double res = max_abs(r);
  int it = 0;
  while (res > cfg.newton_tol && it < cfg.max_inner_iters) {
    if (!newton_update(s, dt, next, r)) break;
    r = midpoint_residual(s, next, dt);
    res = max_abs(r);
    ++it;
  }
  if (!(res <= cfg.newton_tol)) throw NonConvergence(res, 0);

  // A residual just under the tolerance still leaks into C at every step;
  // one more quadratic step takes it to rounding level.
  if (res > 0.0) {
    State polished = next;
    if (newton_update(s, dt, polished, r)) {
      const double pres = max_abs(midpoint_residual(s, polished, dt));
      if (pres < res) {
        next = polished;
        res = pres;
        ++it;
      }
    }
  }
  return {next, res, it};
}

StepResult solve_picard(const State& s, const IntegratorConfig& cfg) {
  const double dt = cfg.dt;
  State next = s + dt * dynamics::vector_field(s);
  State r = midpoint_residual(s, next, dt);
  double res = max_abs(r);
  int it = 0;
  while (res > cfg.newton_tol && it < cfg.max_inner_iters) {
    next = s + dt * dynamics::vector_field(0.5 * (s + next));
    r = midpoint_residual(s, next, dt);
    res = max_abs(r);
    ++it;
  }
  if (!(res <= cfg.newton_tol)) throw NonConvergence(res, 0);
  return {next, res, it};
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!std::isfinite(dt) || dt == 0.0) throw InvalidArgument("dt must be finite and nonzero");
  if (!std::isfinite(newton_tol) || newton_tol <= 0.0) throw InvalidArgument("newton_tol must be positive");
  if (max_inner_iters < 1) throw InvalidArgument("max_inner_iters must be at least 1");
  if (max_steps < 1) throw InvalidArgument("max_steps must be at least 1");
}

State midpoint_residual(const State& prev, const State& next, double dt) {
  return (next - prev) - dt * dynamics::vector_field(0.5 * (prev + next));
}

State expanded_residual(const State& prev, const State& next, double dt) {
  const double sx = prev.x + next.x;
  const double sy = prev.y + next.y;
  const double sz = prev.z + next.z;
  constexpr double k = 1.0 / 16.0;
  return {(next.x - prev.x) - dt * k * sy * sz * (4.0 + sy * sy),
          (next.y - prev.y) + dt * k * sx * sz * (4.0 + sx * sx),
          (next.z - prev.z) - dt * k * sx * sy * (sx * sx - sy * sy)};
}

StepResult solve_step(const State& s, const IntegratorConfig& cfg) {
  if (!is_finite(s)) throw InvalidArgument("state must be finite");
  cfg.validate();
  return cfg.solver == InnerSolver::Newton ? solve_newton(s, cfg) : solve_picard(s, cfg);
}

double Trajectory::max_abs_c_drift() const {
  double worst = 0.0;
  for (const auto& r : samples) worst = std::fmax(worst, std::fabs(r.c_drift));
  return worst;
}

double Trajectory::max_abs_h_drift() const {
  double worst = 0.0;
  for (const auto& r : samples) worst = std::fmax(worst, std::fabs(r.h_drift));
  return worst;
}

Trajectory integrate(const State& s0, const IntegratorConfig& cfg) {
  if (!is_finite(s0)) throw InvalidArgument("initial state must be finite");
  cfg.validate();
  const double h0 = dynamics::hamiltonian(s0);
  const double c0 = dynamics::casimir(s0);

  Trajectory traj{cfg, s0, {}};
  traj.samples.reserve(cfg.max_steps + 1);
  traj.samples.push_back({0, 0.0, s0, 0.0, 0.0});
  State s = s0;
  for (std::size_t k = 1; k <= cfg.max_steps; ++k) {
    try {
      s = solve_step(s, cfg).next;
    } catch (const NonConvergence& e) {
      throw NonConvergence(e.last_residual(), k);
    }
    traj.samples.push_back(
        {k, static_cast<double>(k) * cfg.dt, s, dynamics::hamiltonian(s) - h0, dynamics::casimir(s) - c0});
  }
  return traj;
}

std::vector<DriftMeasurement> order_probe(const State& s0, double t_final, std::span<const double> dts,
                                          double newton_tol) {
  std::vector<DriftMeasurement> out;
  out.reserve(dts.size());
  for (const double dt : dts) {
    if (!std::isfinite(dt) || dt == 0.0) throw InvalidArgument("order_probe: dt must be finite and nonzero");
    const double n = t_final / dt;
    const double steps = std::round(n);
    if (steps < 1.0 || std::fabs(n - steps) > 1e-9 * std::fmax(1.0, std::fabs(n))) {
      throw InvalidArgument("order_probe: dt must divide t_final into an integer number of steps");
    }
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.newton_tol = newton_tol;
    cfg.max_steps = static_cast<std::size_t>(steps);
    const auto traj = integrate(s0, cfg);
    out.push_back({dt, std::fabs(traj.samples.back().h_drift)});
  }
  return out;
}

}  // namespace biham::integrator
