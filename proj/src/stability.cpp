// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "biham/error.hpp"

namespace biham::stability {
namespace {

using cd = std::complex<double>;

// Monic cubic t^3 + a2 t^2 + a1 t + a0.
struct Cubic {
  double a2, a1, a0;
  double value(double t) const { return ((t + a2) * t + a1) * t + a0; }
  double slope(double t) const { return (3.0 * t + 2.0 * a2) * t + a1; }
};

double polish(const Cubic& p, double t) {
  for (int i = 0; i < 8; ++i) {
    const double v = p.value(t);
    const double d = p.slope(t);
    if (v == 0.0 || d == 0.0) break;
    const double next = t - v / d;
    if (!(std::fabs(p.value(next)) < std::fabs(v))) break;
    t = next;
  }
  return t;
}

// Roots of t^2 + b t + c.
std::array<cd, 2> quadratic_roots(double b, double c) {
  const double disc = 0.25 * b * b - c;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    // Avoid cancellation in the smaller root.
    const double big = -0.5 * b + (b > 0.0 ? -r : r);
    const double small = big != 0.0 ? c / big : 0.0;
    return {cd(big, 0.0), cd(small, 0.0)};
  }
  const double im = std::sqrt(-disc);
  return {cd(-0.5 * b, -im), cd(-0.5 * b, im)};
}

std::array<double, 2> sym2_eigenvalues(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  return {mean - rad, mean + rad};
}

void require_nonzero(const ecmap::EquilibriumFamily& f) {
  if (!std::isfinite(f.m) || f.m == 0.0) throw InvalidArgument("parameter M must be finite and nonzero");
}

}  // namespace

Spectrum eigenvalues3(const Mat3& m) {
  const double tr = m[0][0] + m[1][1] + m[2][2];
  const double minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                        m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  const Cubic poly{-tr, minors, -det};

  double scale = 0.0;
  for (const auto& row : m)
    for (double v : row) scale = std::fmax(scale, std::fabs(v));

  Spectrum out{};
  if (scale == 0.0) return out;

  // Depressed cubic u^3 + p u + q with t = u - a2/3.
  const double shift = poly.a2 / 3.0;
  const double p = poly.a1 - poly.a2 * poly.a2 / 3.0;
  const double q = 2.0 * poly.a2 * poly.a2 * poly.a2 / 27.0 - poly.a2 * poly.a1 / 3.0 + poly.a0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;

  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(-0.5 * q + sq) + std::cbrt(-0.5 * q - sq);
    const double r = polish(poly, u - shift);
    // Deflate by (t - r).
    const double b = poly.a2 + r;
    const double c = poly.a1 + b * r;
    const auto pair = quadratic_roots(b, c);
    out = {cd(r, 0.0), pair[0], pair[1]};
  } else if (p == 0.0) {
    const double r = polish(poly, -shift);
    out = {cd(r, 0.0), cd(r, 0.0), cd(r, 0.0)};
  } else {
    const double rad = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * rad), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const double u = rad * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
      out[static_cast<std::size_t>(k)] = cd(polish(poly, u - shift), 0.0);
    }
  }

  const double flush = 1e-13 * scale;
  for (auto& e : out) {
    e = cd(std::fabs(e.real()) <= flush ? 0.0 : e.real(), std::fabs(e.imag()) <= flush ? 0.0 : e.imag());
  }
  std::sort(out.begin(), out.end(), [](const cd& l, const cd& r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
  return out;
}

Spectrum spectrum_at(const ecmap::EquilibriumFamily& f) {
  return eigenvalues3(dynamics::jacobian(ecmap::realize(f)));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NonlinearlyStable: return "NonlinearlyStable";
    case Verdict::Unstable: return "Unstable";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "Degenerate";
}

std::string_view certificate_name(Certificate c) {
  switch (c) {
    case Certificate::PositiveRealEigenvalue: return "positive real eigenvalue";
    case Certificate::ArnoldDefinite: return "Arnold second variation definite";
    case Certificate::LyapunovCasimir: return "Lyapunov function at origin";
    case Certificate::None: return "none";
  }
  return "none";
}

StabilityVerdict arnold_test(const ecmap::EquilibriumFamily& f) {
  using ecmap::Family;
  if (f.family == Family::E4 || f.family == Family::E5) {
    throw WrongFamily("Arnold test applies to E1, E2, E3 only");
  }
  require_nonzero(f);

  const State e = ecmap::realize(f);
  const auto g = dynamics::gradients(e);
  const double lambda = -dot(g.grad_h, g.grad_c) / dot(g.grad_c, g.grad_c);
  const State grad_f = g.grad_h + lambda * g.grad_c;
  if (max_abs(grad_f) > 1e-9 * std::fmax(1.0, max_abs(g.grad_h))) {
    throw NoMultiplier("grad H + lambda grad C = 0 has no solution");
  }

  // Hessian of F = H + lambda C is diagonal: (3x^2 + l, 3y^2 + l, -1 + l).
  const std::array<double, 3> hess = {3.0 * e.x * e.x + lambda, 3.0 * e.y * e.y + lambda, -1.0 + lambda};
  // Tangent plane of the Casimir level set: the two axes orthogonal to e.
  std::array<int, 2> axes{};
  switch (f.family) {
    case Family::E1: axes = {1, 2}; break;
    case Family::E2: axes = {0, 2}; break;
    default: axes = {0, 1}; break;
  }
  const auto ev = sym2_eigenvalues(hess[static_cast<std::size_t>(axes[0])], 0.0,
                                   hess[static_cast<std::size_t>(axes[1])]);

  StabilityVerdict v;
  v.family = f;
  v.spectrum = spectrum_at(f);
  v.multiplier = lambda;
  v.restricted_eigenvalues = ev;
  const bool definite = (ev[0] > kDefinitenessTol && ev[1] > kDefinitenessTol) ||
                        (ev[0] < -kDefinitenessTol && ev[1] < -kDefinitenessTol);
  v.verdict = definite ? Verdict::NonlinearlyStable : Verdict::Degenerate;
  v.certificate = definite ? Certificate::ArnoldDefinite : Certificate::None;
  return v;
}

StabilityVerdict classify_equilibrium(const ecmap::EquilibriumFamily& f) {
  using ecmap::Family;
  if (!std::isfinite(f.m)) throw InvalidArgument("parameter M must be finite");
  if (f.m == 0.0) {
    // All families meet at the origin, where C is a positive definite
    // conserved quantity.
    StabilityVerdict v;
    v.family = f;
    v.spectrum = spectrum_at(f);
    v.verdict = Verdict::NonlinearlyStable;
    v.certificate = Certificate::LyapunovCasimir;
    return v;
  }
  if (f.family == Family::E4 || f.family == Family::E5) {
    StabilityVerdict v;
    v.family = f;
    v.spectrum = spectrum_at(f);
    const double top = v.spectrum.back().real();
    const bool unstable = top > kDefinitenessTol;
    v.verdict = unstable ? Verdict::Unstable : Verdict::Degenerate;
    v.certificate = unstable ? Certificate::PositiveRealEigenvalue : Certificate::None;
    return v;
  }
  return arnold_test(f);
}

double predicted_period(const ecmap::EquilibriumFamily& f) {
  using ecmap::Family;
  require_nonzero(f);
  const double m2 = f.m * f.m;
  switch (f.family) {
    case Family::E1:
    case Family::E2: return 2.0 * std::numbers::pi / (m2 * std::sqrt(m2 + 1.0));
    case Family::E3: return 2.0 * std::numbers::pi / std::fabs(f.m);
    default: throw WrongFamily("no period prediction for E4/E5");
  }
}

double moser_surface_value(double m, const State& s) {
  const double m2 = m * m;
  return m2 * dynamics::casimir(s) - dynamics::hamiltonian(s) - 0.25 * m2 * m2;
}

State moser_gradient(double m, const State& s) {
  const auto g = dynamics::gradients(s);
  return m * m * g.grad_c - g.grad_h;
}

ReturnMeasurement first_return(const State& s0, const State& normal, double dt, double t_max,
                               double newton_tol) {
  const double flux = dot(normal, dynamics::vector_field(s0));
  if (flux == 0.0) throw InvalidArgument("section is tangent to the flow at the start point");
  if (!(t_max > 0.0) || !(dt > 0.0)) throw InvalidArgument("dt and t_max must be positive");
  const State n = (flux > 0.0 ? 1.0 : -1.0) * normal;

  integrator::IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.newton_tol = newton_tol;
  const auto max_steps = static_cast<std::size_t>(std::ceil(t_max / dt));

  State prev = s0;
  double g_prev = 0.0;
  for (std::size_t k = 1; k <= max_steps; ++k) {
    State cur;
    try {
      cur = integrator::solve_step(prev, cfg).next;
    } catch (const NonConvergence& e) {
      throw NonConvergence(e.last_residual(), k);
    }
    const double g = dot(n, cur - s0);
    if (g_prev < 0.0 && g >= 0.0) {
      const double frac = g_prev / (g_prev - g);
      const State hit = prev + frac * (cur - prev);
      return {true, (static_cast<double>(k - 1) + frac) * dt, norm(hit - s0), k};
    }
    prev = cur;
    g_prev = g;
  }
  return {false, 0.0, 0.0, max_steps};
}

}  // namespace biham::stability
