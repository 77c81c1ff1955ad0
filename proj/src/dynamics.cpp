// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/dynamics.hpp"

namespace biham {

State operator*(const Mat3& m, const State& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z, m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

namespace dynamics {

double hamiltonian(const State& s) {
  const double x2 = s.x * s.x;
  const double y2 = s.y * s.y;
  return 0.25 * x2 * x2 + 0.25 * y2 * y2 - 0.5 * s.z * s.z;
}

double casimir(const State& s) { return 0.5 * (s.x * s.x + s.y * s.y + s.z * s.z); }

State vector_field(const State& s) {
  const auto [x, y, z] = s;
  return {y * z * (1.0 + y * y), -x * z * (1.0 + x * x), x * y * (x * x - y * y)};
}

Mat3 jacobian(const State& s) {
  const auto [x, y, z] = s;
  const double x2 = x * x;
  const double y2 = y * y;
  return {{{0.0, 3.0 * y2 * z + z, y2 * y + y},
           {-3.0 * x2 * z - z, 0.0, -x2 * x - x},
           {3.0 * x2 * y - y2 * y, x2 * x - 3.0 * x * y2, 0.0}}};
}

Gradients gradients(const State& s) { return {{s.x * s.x * s.x, s.y * s.y * s.y, -s.z}, s}; }

State cross_product_field(const State& s) {
  const auto g = gradients(s);
  return cross(g.grad_h, g.grad_c);
}

State apply_symmetry(Symmetry t, const State& s) {
  const auto [x, y, z] = s;
  switch (t) {
    case Symmetry::NegateXY: return {-x, -y, z};
    case Symmetry::NegateXZ: return {-x, y, -z};
    case Symmetry::NegateYZ: return {x, -y, -z};
    case Symmetry::RotateCcw: return {-y, x, z};
    case Symmetry::RotateCw: return {y, -x, z};
  }
  return s;
}

Mat3 symmetry_matrix(Symmetry t) {
  Mat3 m{};
  for (int j = 0; j < 3; ++j) {
    State e{};
    (j == 0 ? e.x : (j == 1 ? e.y : e.z)) = 1.0;
    const State col = apply_symmetry(t, e);
    for (int i = 0; i < 3; ++i) m[i][j] = col[i];
  }
  return m;
}

std::string_view symmetry_name(Symmetry t) {
  switch (t) {
    case Symmetry::NegateXY: return "(-x,-y,z)";
    case Symmetry::NegateXZ: return "(-x,y,-z)";
    case Symmetry::NegateYZ: return "(x,-y,-z)";
    case Symmetry::RotateCcw: return "(-y,x,z)";
    case Symmetry::RotateCw: return "(y,-x,z)";
  }
  return "?";
}

}  // namespace dynamics
}  // namespace biham
