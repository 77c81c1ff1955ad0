// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "biham/dynamics.hpp"
#include "biham/ecmap.hpp"
#include "biham/integrator.hpp"

namespace biham::stability {

using Spectrum = std::array<std::complex<double>, 3>;

// Eigenvalues of a real 3x3 matrix from its characteristic cubic, sorted by
// (real part, imaginary part). Real roots are polished by Newton steps on
// the cubic; parts below rounding level are flushed to zero.
Spectrum eigenvalues3(const Mat3& m);

Spectrum spectrum_at(const ecmap::EquilibriumFamily& f);

enum class Verdict { NonlinearlyStable, Unstable, Degenerate };
enum class Certificate { PositiveRealEigenvalue, ArnoldDefinite, LyapunovCasimir, None };

std::string_view verdict_name(Verdict v);
std::string_view certificate_name(Certificate c);

inline constexpr double kDefinitenessTol = 1e-9;

struct StabilityVerdict {
  ecmap::EquilibriumFamily family;
  Spectrum spectrum{};
  Verdict verdict = Verdict::Degenerate;
  Certificate certificate = Certificate::None;
  // Arnold data; zero unless the Arnold test ran.
  double multiplier = 0.0;
  std::array<double, 2> restricted_eigenvalues{};
};

// Energy-Casimir test with F = H + lambda*C at E1, E2 or E3: finds lambda
// from grad F = 0 and checks the sign of the Hessian of F on the tangent
// plane of the Casimir level set, spanned by the two coordinate axes other
// than the equilibrium's own. Throws WrongFamily for E4/E5,
// InvalidArgument for M == 0.
StabilityVerdict arnold_test(const ecmap::EquilibriumFamily& f);

StabilityVerdict classify_equilibrium(const ecmap::EquilibriumFamily& f);

// 2*pi / (M^2 sqrt(M^2+1)) for E1/E2, 2*pi/|M| for E3.
double predicted_period(const ecmap::EquilibriumFamily& f);

// M^2 C - H shifted to vanish at (M,0,0). It is a constant of motion.
double moser_surface_value(double m, const State& s);
State moser_gradient(double m, const State& s);

struct ReturnMeasurement {
  bool found = false;
  double period = 0.0;
  double return_distance = 0.0;  // |s(period) - s0|, linearly interpolated
  std::size_t steps = 0;
};

// First return of the mid-point flow to the plane through s0 with normal
// `normal`, crossed in the same direction as at t = 0. Stops at t_max.
ReturnMeasurement first_return(const State& s0, const State& normal, double dt, double t_max,
                               double newton_tol = 1e-12);

}  // namespace biham::stability
