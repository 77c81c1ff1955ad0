// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <string_view>

namespace biham {

// A point of phase space.
struct State {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  friend constexpr bool operator==(const State&, const State&) = default;
};

constexpr State operator+(const State& a, const State& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr State operator-(const State& a, const State& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr State operator*(double k, const State& a) { return {k * a.x, k * a.y, k * a.z}; }
constexpr double dot(const State& a, const State& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr State cross(const State& a, const State& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const State& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const State& a) { return std::fmax(std::fabs(a.x), std::fmax(std::fabs(a.y), std::fabs(a.z))); }
inline bool is_finite(const State& a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }

using Mat3 = std::array<std::array<double, 3>, 3>;

State operator*(const Mat3& m, const State& v);

// Value of the Hamiltonian and of the Casimir at a point.
struct EcPoint {
  double h = 0.0;
  double c = 0.0;
  friend constexpr bool operator==(const EcPoint&, const EcPoint&) = default;
};

namespace dynamics {

// H = x^4/4 + y^4/4 - z^2/2
double hamiltonian(const State& s);
// C = (x^2 + y^2 + z^2)/2
double casimir(const State& s);

// (yz(1+y^2), -xz(1+x^2), xy(x^2-y^2))
State vector_field(const State& s);

// Derivative of vector_field.
Mat3 jacobian(const State& s);

struct Gradients {
  State grad_h;
  State grad_c;
};
Gradients gradients(const State& s);

// grad H x grad C; an independent route to the vector field.
State cross_product_field(const State& s);

// The five coordinate maps the system is invariant under. They are linear,
// so the differential of each map is the map itself.
enum class Symmetry {
  NegateXY,   // (x,y,z) -> (-x,-y, z)
  NegateXZ,   // (x,y,z) -> (-x, y,-z)
  NegateYZ,   // (x,y,z) -> ( x,-y,-z)
  RotateCcw,  // (x,y,z) -> (-y, x, z)
  RotateCw,   // (x,y,z) -> ( y,-x, z)
};

inline constexpr std::array<Symmetry, 5> kSymmetries = {
    Symmetry::NegateXY, Symmetry::NegateXZ, Symmetry::NegateYZ, Symmetry::RotateCcw, Symmetry::RotateCw};

State apply_symmetry(Symmetry t, const State& s);
Mat3 symmetry_matrix(Symmetry t);
std::string_view symmetry_name(Symmetry t);

}  // namespace dynamics
}  // namespace biham
