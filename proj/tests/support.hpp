// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only helpers: seeded generators and oracles that do not share code
// paths with the library routines they check.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "biham/dynamics.hpp"

namespace biham::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20260416) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  State state(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::mt19937_64 gen_;
};

// Central differences of the vector field, column j = d f / d s_j.
inline Mat3 fd_jacobian(const State& s, double step = 1e-5) {
  Mat3 out{};
  for (int j = 0; j < 3; ++j) {
    State e{};
    (j == 0 ? e.x : (j == 1 ? e.y : e.z)) = step;
    const State d = (1.0 / (2.0 * step)) * (dynamics::vector_field(s + e) - dynamics::vector_field(s - e));
    for (int i = 0; i < 3; ++i) out[i][j] = d[i];
  }
  return out;
}

inline std::complex<double> det_shifted(const Mat3& m, std::complex<double> lambda) {
  using cd = std::complex<double>;
  auto a = [&](int i, int j) { return cd(m[i][j]) - (i == j ? lambda : cd(0.0)); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// Fiber points at fixed z by scanning the circle x^2 + y^2 = 2c - z^2 for
// sign changes of H - h and bisecting. Misses tangential (double) roots.
inline std::vector<State> brute_force_fiber(double h, double c, double z, int samples = 20000) {
  std::vector<State> out;
  const double r2 = 2.0 * c - z * z;
  if (r2 <= 0.0) return out;
  const double r = std::sqrt(r2);
  auto point = [&](double th) { return State{r * std::cos(th), r * std::sin(th), z}; };
  auto g = [&](double th) { return dynamics::hamiltonian(point(th)) - h; };
  const double step = 2.0 * std::numbers::pi / samples;
  for (int i = 0; i < samples; ++i) {
    double lo = i * step;
    double hi = lo + step;
    double glo = g(lo);
    const double ghi = g(hi);
    if (glo == 0.0) {
      out.push_back(point(lo));
      continue;
    }
    if ((glo < 0.0) == (ghi < 0.0)) continue;
    for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if ((gm < 0.0) == (glo < 0.0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    out.push_back(point(0.5 * (lo + hi)));
  }
  return out;
}

}  // namespace biham::testing
