// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>

#include "biham/dynamics.hpp"

namespace biham::poisson {

// Parameters (a, b, cc, dd) of the realization family. The determinant
// condition a*dd - b*cc = 1 is checked once, at construction.
class RealizationParams {
 public:
  static constexpr double kDeterminantTol = 1e-12;

  // Throws InvalidArgument when |a*dd - b*cc - 1| > kDeterminantTol or any
  // entry is not finite.
  RealizationParams(double a, double b, double cc, double dd);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double cc() const noexcept { return cc_; }
  double dd() const noexcept { return dd_; }

 private:
  double a_, b_, cc_, dd_;
};

// Pi1: the linear (so(3)*) structure.
Mat3 pi1(const State& s);
// Pi2: the cubic structure realizing the flow with C as Hamiltonian.
Mat3 pi2(const State& s);
// a*Pi1 - b*Pi2.
Mat3 pi_family(const RealizationParams& p, const State& s);
// Any member alpha*Pi1 + beta*Pi2 of the pencil; no determinant condition.
Mat3 pencil(double alpha, double beta, const State& s);

// cc*C + dd*H
double h_family(const RealizationParams& p, const State& s);
State grad_h_family(const RealizationParams& p, const State& s);
// a*C + b*H
double casimir_family(const RealizationParams& p, const State& s);
State grad_casimir_family(const RealizationParams& p, const State& s);

// A Poisson structure as a value: a matrix field plus a label for reports.
struct PoissonStructure {
  std::string label;
  std::function<Mat3(const State&)> evaluate;

  static PoissonStructure Pi1();
  static PoissonStructure Pi2();
  static PoissonStructure Family(const RealizationParams& p);
  static PoissonStructure Pencil(double alpha, double beta);
};

inline constexpr double kJacobiStep = 1e-5;

// Largest absolute cyclic sum
//   sum_l P_il d_l P_jk + P_jl d_l P_ki + P_kl d_l P_ij
// over all index triples, with derivatives by central differences.
double jacobi_residual(const PoissonStructure& p, const State& s, double step = kJacobiStep);

// max |M + M^T| entry.
double antisymmetry_defect(const Mat3& m);

}  // namespace biham::poisson
