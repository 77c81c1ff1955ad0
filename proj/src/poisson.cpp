// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/poisson.hpp"

#include <cmath>
#include <sstream>

#include "biham/error.hpp"

namespace biham::poisson {

RealizationParams::RealizationParams(double a, double b, double cc, double dd) : a_(a), b_(b), cc_(cc), dd_(dd) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(cc) || !std::isfinite(dd)) {
    throw InvalidArgument("realization parameters must be finite");
  }
  const double det = a * dd - b * cc;
  if (std::fabs(det - 1.0) > kDeterminantTol) {
    std::ostringstream os;
    os << "realization parameters need a*dd - b*cc = 1, got " << det;
    throw InvalidArgument(os.str());
  }
}

Mat3 pi1(const State& s) {
  const auto [x, y, z] = s;
  return {{{0.0, z, -y}, {-z, 0.0, x}, {y, -x, 0.0}}};
}

Mat3 pi2(const State& s) {
  const auto [x, y, z] = s;
  const double x3 = x * x * x;
  const double y3 = y * y * y;
  return {{{0.0, z, y3}, {-z, 0.0, -x3}, {-y3, x3, 0.0}}};
}

Mat3 pencil(double alpha, double beta, const State& s) {
  const auto [x, y, z] = s;
  const double x3 = x * x * x;
  const double y3 = y * y * y;
  // Entries built once above the diagonal and mirrored, so M + M^T == 0.
  const double m01 = (alpha + beta) * z;
  const double m02 = -alpha * y + beta * y3;
  const double m12 = alpha * x - beta * x3;
  return {{{0.0, m01, m02}, {-m01, 0.0, m12}, {-m02, -m12, 0.0}}};
}

Mat3 pi_family(const RealizationParams& p, const State& s) { return pencil(p.a(), -p.b(), s); }

double h_family(const RealizationParams& p, const State& s) {
  const auto [x, y, z] = s;
  const double x2 = x * x;
  const double y2 = y * y;
  return p.dd() / 4.0 * (x2 * x2 + y2 * y2) + p.cc() / 2.0 * (x2 + y2) + (p.cc() - p.dd()) / 2.0 * z * z;
}

State grad_h_family(const RealizationParams& p, const State& s) {
  const auto g = dynamics::gradients(s);
  return p.cc() * g.grad_c + p.dd() * g.grad_h;
}

double casimir_family(const RealizationParams& p, const State& s) {
  return p.a() * dynamics::casimir(s) + p.b() * dynamics::hamiltonian(s);
}

State grad_casimir_family(const RealizationParams& p, const State& s) {
  const auto g = dynamics::gradients(s);
  return p.a() * g.grad_c + p.b() * g.grad_h;
}

PoissonStructure PoissonStructure::Pi1() { return {"Pi1", &pi1}; }
PoissonStructure PoissonStructure::Pi2() { return {"Pi2", &pi2}; }

PoissonStructure PoissonStructure::Family(const RealizationParams& p) {
  std::ostringstream os;
  os << "PiFamily(" << p.a() << "," << p.b() << ")";
  return {os.str(), [p](const State& s) { return pi_family(p, s); }};
}

PoissonStructure PoissonStructure::Pencil(double alpha, double beta) {
  std::ostringstream os;
  os << "Pencil(" << alpha << "," << beta << ")";
  return {os.str(), [alpha, beta](const State& s) { return pencil(alpha, beta, s); }};
}

double jacobi_residual(const PoissonStructure& p, const State& s, double step) {
  // d[l] = partial derivative of the matrix field along coordinate l.
  std::array<Mat3, 3> d{};
  for (int l = 0; l < 3; ++l) {
    State e{};
    (l == 0 ? e.x : (l == 1 ? e.y : e.z)) = step;
    const Mat3 plus = p.evaluate(s + e);
    const Mat3 minus = p.evaluate(s - e);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d[l][i][j] = (plus[i][j] - minus[i][j]) / (2.0 * step);
  }
  const Mat3 m = p.evaluate(s);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        double sum = 0.0;
        for (int l = 0; l < 3; ++l) {
          sum += m[i][l] * d[l][j][k] + m[j][l] * d[l][k][i] + m[k][l] * d[l][i][j];
        }
        worst = std::fmax(worst, std::fabs(sum));
      }
    }
  }
  return worst;
}

double antisymmetry_defect(const Mat3& m) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::fmax(worst, std::fabs(m[i][j] + m[j][i]));
  return worst;
}

}  // namespace biham::poisson
