// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>

#include "biham/error.hpp"
#include "biham/fibers.hpp"
#include "biham/integrator.hpp"
#include "support.hpp"

using namespace biham;
using namespace biham::integrator;
using biham::testing::Rng;

namespace {
IntegratorConfig config(double dt, std::size_t steps = 1, double tol = 1e-12) {
  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.max_steps = steps;
  cfg.newton_tol = tol;
  return cfg;
}
}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(config(0.0).validate(), InvalidArgument);
  CHECK_THROWS_AS(config(NAN).validate(), InvalidArgument);
  CHECK_THROWS_AS(config(0.1, 0).validate(), InvalidArgument);
  CHECK_THROWS_AS(config(0.1, 1, 0.0).validate(), InvalidArgument);
  auto cfg = config(0.1);
  cfg.max_inner_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  CHECK_NOTHROW(config(-0.1).validate());
}

TEST_CASE("equilibria are fixed points of the step") {
  for (double dt : {0.015, -0.3, 1.0}) {
    CHECK(midpoint_step({1, 1, 0}, config(dt)) == State{1, 1, 0});
    CHECK(midpoint_step({0, 0, 2}, config(dt)) == State{0, 0, 2});
  }
}

TEST_CASE("the two spellings of the implicit equation agree") {
  Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    const State a = rng.state(-2, 2);
    const State b = a + rng.state(-0.1, 0.1);
    const double dt = rng.uniform(-0.05, 0.05);
    CHECK(max_abs(midpoint_residual(a, b, dt) - expanded_residual(a, b, dt)) <= 1e-14);
  }
}

TEST_CASE("a step solves the implicit equation and keeps C") {
  Rng rng(23);
  for (int n = 0; n < 200; ++n) {
    const State s = rng.state(-1.5, 1.5);
    const auto cfg = config(0.015);
    const auto r = solve_step(s, cfg);
    CHECK(r.residual <= cfg.newton_tol);
    CHECK(max_abs(midpoint_residual(s, r.next, cfg.dt)) <= cfg.newton_tol);
    CHECK(std::fabs(dynamics::casimir(r.next) - dynamics::casimir(s)) <= 10 * cfg.newton_tol);
  }
}

TEST_CASE("one step from the reference start") {
  const auto cfg = config(0.015, 1, 1e-13);
  SUBCASE("printed start") {
    const State s{1.25338, 0.42312, 0.5};
    const auto r = solve_step(s, cfg);
    CHECK(max_abs(midpoint_residual(s, r.next, cfg.dt)) <= 1e-13);
    CHECK(max_abs(expanded_residual(s, r.next, cfg.dt)) <= 1e-13);
    // The printed start has C = 0.99999598 (rounded digits), so C is checked
    // against its own starting value.
    CHECK(std::fabs(dynamics::casimir(r.next) - dynamics::casimir(s)) <= 1e-12);
  }
  SUBCASE("exact start on C = 1") {
    const State s = fibers::solve_initial_condition(0.5, 1.0, 0.5).back();
    const auto r = solve_step(s, cfg);
    CHECK(max_abs(midpoint_residual(s, r.next, cfg.dt)) <= 1e-13);
    CHECK(std::fabs(dynamics::casimir(r.next) - 1.0) <= 1e-12);
  }
}

TEST_CASE("Newton and fixed-point inner solvers agree") {
  Rng rng(29);
  for (int n = 0; n < 100; ++n) {
    const State s = rng.state(-1.5, 1.5);
    auto cfg = config(0.01, 1, 1e-13);
    const State newton = midpoint_step(s, cfg);
    cfg.solver = InnerSolver::Picard;
    cfg.max_inner_iters = 200;
    const State picard = midpoint_step(s, cfg);
    CHECK(max_abs(newton - picard) <= 1e-10);
  }
}

TEST_CASE("non-convergence is reported with the failing step") {
  auto cfg = config(5.0, 3);
  cfg.max_inner_iters = 1;
  try {
    integrate({2, 1.5, 2}, cfg);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.step_index() == 1);
    CHECK(e.last_residual() > cfg.newton_tol);
  }
  cfg.solver = InnerSolver::Picard;
  CHECK_THROWS_AS(solve_step({2, 1.5, 2}, cfg), NonConvergence);
}

TEST_CASE("trajectory bookkeeping") {
  const State s0{1.2, 0.3, 0.4};
  const auto traj = integrate(s0, config(0.02, 50));
  REQUIRE(traj.samples.size() == 51);
  CHECK(traj.samples.front().state == s0);
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const auto& r = traj.samples[k];
    CHECK(r.step == k);
    CHECK(r.t == static_cast<double>(k) * 0.02);
    CHECK(r.h_drift == dynamics::hamiltonian(r.state) - dynamics::hamiltonian(s0));
    CHECK(r.c_drift == dynamics::casimir(r.state) - dynamics::casimir(s0));
  }
  CHECK(traj.max_abs_c_drift() <= 10 * 1e-12 * 50);
}

TEST_CASE("equilibrium trajectory is constant") {
  const auto traj = integrate({0, 0, 2}, config(0.1, 10));
  for (const auto& r : traj.samples) CHECK(r.state == State{0, 0, 2});
}

TEST_CASE("reference endpoints after 160 steps") {
  const State s0{1.25338, 0.42312, 0.5};
  const State fwd = integrate(s0, config(0.015, 160)).final_state();
  const State bwd = integrate(s0, config(-0.015, 160)).final_state();
  CHECK(max_abs(fwd - State{1.00305, -0.996944, 0.00128394}) <= 5e-3);
  CHECK(max_abs(bwd - State{1.00438, 0.995591, -0.00465251}) <= 5e-3);
}

TEST_CASE("the scheme is time-reversible") {
  Rng rng(31);
  for (int n = 0; n < 50; ++n) {
    const State s = rng.state(-1.5, 1.5);
    const auto cfg = config(0.02);
    const State there = midpoint_step(s, cfg);
    const State back = midpoint_step(there, config(-0.02));
    CHECK(max_abs(back - s) <= 100 * cfg.newton_tol);
  }
}

TEST_CASE("integration is deterministic") {
  const auto a = integrate({1.2, 0.3, 0.4}, config(0.01, 300));
  const auto b = integrate({1.2, 0.3, 0.4}, config(0.01, 300));
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) CHECK(a.samples[k].state == b.samples[k].state);
}

TEST_CASE("H drift is second order in dt") {
  const std::array<double, 3> dts = {0.02, 0.01, 0.005};
  const auto probe = order_probe({1.2, 0.3, 0.4}, 3.0, dts);
  REQUIRE(probe.size() == 3);
  CHECK(probe[0].h_drift > probe[1].h_drift);
  CHECK(probe[1].h_drift > probe[2].h_drift);
  for (int i = 0; i < 2; ++i) {
    const double ratio = probe[i].h_drift / probe[i + 1].h_drift;
    CAPTURE(ratio);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
  }

  const auto eq = order_probe({1, 0, 0}, 3.0, dts);
  for (const auto& d : eq) CHECK(d.h_drift == 0.0);

  const std::array<double, 1> bad = {0.07};
  CHECK_THROWS_AS(order_probe({1.2, 0.3, 0.4}, 3.0, bad), InvalidArgument);
}
