// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "biham/ecmap.hpp"
#include "biham/fibers.hpp"
#include "biham/integrator.hpp"
#include "biham/poisson.hpp"
#include "biham/stability.hpp"
#include "support.hpp"

using namespace biham;
using ecmap::Family;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome ac1_heteroclinic_endpoints() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = fibers::run_from({1.25338, 0.42312, 0.5}, 0.015, 160);
  const double secs = seconds_since(t0);
  const double ef = max_abs(run.forward_end - State{1.00305, -0.996944, 0.00128394});
  const double eb = max_abs(run.backward_end - State{1.00438, 0.995591, -0.00465251});
  return {ef <= 5e-3 && eb <= 5e-3 && secs < 1.0,
          fmt("forward err %.2e, backward err %.2e (tol 5e-3), %.3fs", ef, eb, secs)};
}

Outcome ac2_initial_conditions() {
  const auto sols = fibers::solve_initial_condition(0.5, 1, 0.5);
  double best = INFINITY;
  for (const auto& s : sols) best = std::min(best, std::max(std::fabs(s.x - 1.25338), std::fabs(s.y - 0.42312)));
  return {sols.size() == 8 && best <= 1e-5, fmt("%zu solutions, closest (x,y) err %.2e", sols.size(), best)};
}

Outcome ac3_casimir_and_order() {
  // h = -1, c = 2 lies in the open stratum above c = -h.
  const auto start = fibers::find_fiber_point(-1, 2);
  if (!start || ecmap::classify(ecmap::ec_map(*start)) != ecmap::RegionLabel::SigmaP2)
    return {false, "no start point on the chosen fiber"};
  integrator::IntegratorConfig cfg;
  cfg.dt = 0.01;
  cfg.max_steps = 10000;
  const auto traj = integrator::integrate(*start, cfg);
  const double drift = traj.max_abs_c_drift();

  const std::array<double, 3> dts{0.02, 0.01, 0.005};
  const auto probe = integrator::order_probe({1.2, 0.3, 0.4}, 3.0, dts);
  const double r1 = std::fabs(probe[0].h_drift / probe[1].h_drift);
  const double r2 = std::fabs(probe[1].h_drift / probe[2].h_drift);
  const bool ok = drift <= 1e-9 && r1 >= 3.5 && r1 <= 4.5 && r2 >= 3.5 && r2 <= 4.5;
  return {ok, fmt("max|C drift| %.2e over 1e4 steps, H-drift ratios %.3f %.3f", drift, r1, r2)};
}

Outcome ac4_spectra() {
  double worst = 0.0;
  for (auto f : {Family::E4, Family::E5})
    for (int i = 0; i < 20; ++i) {
      const double m = 0.1 + i * (2.9 / 19.0);
      const double lam = 2 * m * m * std::sqrt(m * m + 1);
      const auto sp = stability::spectrum_at({f, m});
      worst = std::max({worst, std::abs(sp[0] + lam) / lam, std::abs(sp[1]) / lam, std::abs(sp[2] - lam) / lam});
    }
  double worst_e1 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double m = 0.1 + i * (2.9 / 19.0);
    const double w = m * m * std::sqrt(m * m + 1);
    const auto sp = stability::spectrum_at({Family::E1, m});
    worst_e1 = std::max({worst_e1, std::abs(sp[0] - std::complex<double>(0, -w)) / w, std::abs(sp[1]) / w,
                         std::abs(sp[2] - std::complex<double>(0, w)) / w});
  }
  return {worst <= 1e-9 && worst_e1 <= 1e-9, fmt("max rel err E4/E5 %.2e, E1 %.2e", worst, worst_e1)};
}

Outcome ac5_arnold() {
  const auto v = stability::arnold_test({Family::E1, 1});
  auto ev = v.restricted_eigenvalues;
  std::sort(ev.begin(), ev.end());
  bool ok = std::fabs(v.multiplier + 1) <= 1e-12 && std::fabs(ev[0] + 2) <= 1e-12 && std::fabs(ev[1] + 1) <= 1e-12 &&
            v.verdict == stability::Verdict::NonlinearlyStable;
  int table_ok = 0;
  for (double m : {1.0, -1.0, 0.5, 2.0})
    for (auto f : ecmap::kFamilies) {
      const auto expected = (f == Family::E4 || f == Family::E5) ? stability::Verdict::Unstable
                                                                 : stability::Verdict::NonlinearlyStable;
      table_ok += stability::classify_equilibrium({f, m}).verdict == expected;
    }
  table_ok += stability::classify_equilibrium({Family::E3, 0}).verdict == stability::Verdict::NonlinearlyStable;
  ok = ok && table_ok == 21;
  return {ok, fmt("lambda %.6g, restricted {%.6g, %.6g}, verdict table %d/21", v.multiplier, ev[0], ev[1], table_ok)};
}

Outcome ac6_period() {
  const auto t0 = std::chrono::steady_clock::now();
  const double expected = 2 * std::numbers::pi / std::sqrt(2.0);
  const auto r = stability::first_return({1, 1e-3, 1e-3}, {0, 1, 0}, 1e-3, 10 * expected);
  const double secs = seconds_since(t0);
  const double rel = r.found ? std::fabs(r.period - expected) / expected : INFINITY;
  return {r.found && rel <= 0.01 && secs < 5.0,
          fmt("measured %.6f vs %.6f, rel err %.2e (tol 1e-2), %.3fs", r.period, expected, rel, secs)};
}

Outcome ac7_image() {
  testing::Rng rng;
  int violations = 0;
  for (int n = 0; n < 100000; ++n) {
    const EcPoint p = ecmap::ec_map(rng.state(-3, 3));
    const double slack = 1e-12 * std::max(1.0, std::fabs(p.h));
    if (p.c < -p.h - slack || p.c < std::sqrt(std::max(p.h, 0.0)) - slack) ++violations;
  }
  const bool witness_outside = !ecmap::in_image({0.5, 0.5});
  using L = ecmap::RegionLabel;
  struct Row {
    double h, c;
    L label;
  };
  const Row grid[] = {
      {2, 1.5, L::SigmaP1},     {2, 2.5, L::SigmaP2},       {2, 2, L::Sigma45u},      {2, std::sqrt(2.0), L::Sigma12s},
      {2, 1, L::Outside},       {-2, 2, L::Sigma3s},        {-2, 3, L::SigmaP2},      {-2, 1, L::Outside},
      {0.25, 0.5, L::Sigma12s}, {0.25, 0.6, L::SigmaP1},    {0.25, 0.8, L::SigmaP2},  {0.25, 0.4, L::Outside},
      {0.125, 0.5, L::Sigma45u}, {-0.5, 0.5, L::Sigma3s},   {-0.5, 0.4, L::Outside},  {-0.5, 0.7, L::SigmaP2},
      {0.01, 0.1, L::Sigma12s}, {0.01, 0.12, L::SigmaP1},   {0.01, 0.2, L::SigmaP2},  {0, 0, L::BifurcationPoint},
      {0, 1, L::SigmaP2},       {0, -1, L::Outside},        {1, 1.2, L::SigmaP1},     {1, 1.5, L::SigmaP2},
      {4, 2, L::Sigma12s},      {4, 2.5, L::SigmaP1},       {4, 3, L::SigmaP2},       {8, 4, L::Sigma45u},
  };
  int matched = 0;
  for (const auto& r : grid) matched += ecmap::classify({r.h, r.c}) == r.label;
  const int total = static_cast<int>(std::size(grid));
  return {violations == 0 && witness_outside && matched == total,
          fmt("%d violations in 1e5 states, (0.5,0.5) %s, grid %d/%d", violations,
              witness_outside ? "outside" : "inside", matched, total)};
}

Outcome ac8_critical_points() {
  int mismatches = 0;
  int deficient = 0;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j)
      for (int k = 0; k <= 40; ++k) {
        const State s{(i - 20) / 10.0, (j - 20) / 10.0, (k - 20) / 10.0};
        const bool low = ecmap::rank_dec(s) < 2;
        deficient += low;
        mismatches += low != (ecmap::distance_to_families(s) <= 1e-9);
      }
  return {mismatches == 0, fmt("%d rank-deficient grid points, %d mismatches", deficient, mismatches)};
}

Outcome ac9_poisson() {
  testing::Rng rng(9);
  std::vector<poisson::PoissonStructure> structures{poisson::PoissonStructure::Pi1(), poisson::PoissonStructure::Pi2()};
  std::vector<poisson::RealizationParams> params;
  for (int n = 0; n < 10; ++n) {
    const double a = rng.uniform(-2, 2);
    const double b = rng.uniform(-2, 2);
    double cc = rng.uniform(-2, 2);
    if (std::fabs(a) < 0.1) continue;
    const double dd = (1 + b * cc) / a;
    params.emplace_back(a, b, cc, dd);
    structures.push_back(poisson::PoissonStructure::Family(params.back()));
  }
  double jacobi = 0.0;
  double antisym = 0.0;
  double realize = 0.0;
  double kernel = 0.0;
  for (int n = 0; n < 100; ++n) {
    const State s = rng.state(-2, 2);
    const State f = dynamics::vector_field(s);
    for (const auto& ps : structures) {
      antisym = std::max(antisym, poisson::antisymmetry_defect(ps.evaluate(s)));
      if (n < 10) jacobi = std::max(jacobi, poisson::jacobi_residual(ps, s));
    }
    const auto g = dynamics::gradients(s);
    const Mat3 p1 = poisson::pi1(s);
    const Mat3 p2 = poisson::pi2(s);
    realize = std::max({realize, max_abs(p1 * g.grad_h - f), max_abs(p2 * g.grad_c - f)});
    kernel = std::max({kernel, max_abs(p1 * g.grad_c), max_abs(p2 * g.grad_h)});
    for (const auto& rp : params) {
      const Mat3 pf = poisson::pi_family(rp, s);
      realize = std::max(realize, max_abs(pf * poisson::grad_h_family(rp, s) - f));
      kernel = std::max(kernel, max_abs(pf * poisson::grad_casimir_family(rp, s)));
    }
  }
  const bool ok = antisym == 0.0 && jacobi <= 1e-8 && realize <= 1e-10 && kernel <= 1e-10;
  return {ok, fmt("%zu structures, antisymmetry %.1e, Jacobi %.2e, realization %.2e, kernel %.2e", structures.size(),
                  antisym, jacobi, realize, kernel)};
}

Outcome ac10_boundary_fibers() {
  const double r = std::sqrt(2.0);
  struct Case {
    double h, c;
    std::vector<State> printed;
  };
  const Case cases[] = {{1, 1, {{r, 0, 0}, {-r, 0, 0}, {0, r, 0}, {0, -r, 0}}}, {-1, 1, {{0, 0, r}, {0, 0, -r}}}};
  int stray = 0;
  int missing = 0;
  double residual = 0.0;
  std::size_t total = 0;
  for (const auto& k : cases) {
    const auto pts = fibers::sweep_fiber(k.h, k.c, 4001);
    total += pts.size();
    auto near = [](const State& a, const State& b) { return max_abs(a - b) <= 1e-7; };
    for (const auto& p : pts) {
      residual = std::max({residual, std::fabs(dynamics::hamiltonian(p) - k.h), std::fabs(dynamics::casimir(p) - k.c)});
      stray += std::none_of(k.printed.begin(), k.printed.end(), [&](const State& q) { return near(p, q); });
    }
    for (const auto& q : k.printed)
      missing += std::none_of(pts.begin(), pts.end(), [&](const State& p) { return near(p, q); });
  }
  return {stray == 0 && missing == 0 && residual <= 1e-9,
          fmt("%zu sweep hits, %d stray, %d printed points missed, max residual %.1e", total, stray, missing, residual)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 heteroclinic endpoints", ac1_heteroclinic_endpoints},
      {"AC2 initial-condition solver", ac2_initial_conditions},
      {"AC3 Casimir exactness and order", ac3_casimir_and_order},
      {"AC4 spectral formulas", ac4_spectra},
      {"AC5 Arnold test and verdict table", ac5_arnold},
      {"AC6 period near E1", ac6_period},
      {"AC7 image and partition", ac7_image},
      {"AC8 critical points", ac8_critical_points},
      {"AC9 Poisson axioms", ac9_poisson},
      {"AC10 boundary fibers", ac10_boundary_fibers},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s  %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
