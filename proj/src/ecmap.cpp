// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include "biham/ecmap.hpp"

#include <algorithm>
#include <cmath>

#include "biham/error.hpp"

namespace biham::ecmap {

std::string_view label_name(RegionLabel l) {
  switch (l) {
    case RegionLabel::Sigma12s: return "Sigma12s";
    case RegionLabel::Sigma3s: return "Sigma3s";
    case RegionLabel::Sigma45u: return "Sigma45u";
    case RegionLabel::SigmaP1: return "SigmaP1";
    case RegionLabel::SigmaP2: return "SigmaP2";
    case RegionLabel::BifurcationPoint: return "BifurcationPoint";
    case RegionLabel::Outside: return "Outside";
  }
  return "Outside";
}

std::optional<RegionLabel> parse_label(std::string_view name) {
  for (auto l : {RegionLabel::Sigma12s, RegionLabel::Sigma3s, RegionLabel::Sigma45u, RegionLabel::SigmaP1,
                 RegionLabel::SigmaP2, RegionLabel::BifurcationPoint, RegionLabel::Outside}) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::E1: return "E1";
    case Family::E2: return "E2";
    case Family::E3: return "E3";
    case Family::E4: return "E4";
    case Family::E5: return "E5";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : kFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

State realize(const EquilibriumFamily& f) {
  const double m = f.m;
  switch (f.family) {
    case Family::E1: return {m, 0.0, 0.0};
    case Family::E2: return {0.0, m, 0.0};
    case Family::E3: return {0.0, 0.0, m};
    case Family::E4: return {m, m, 0.0};
    case Family::E5: return {m, -m, 0.0};
  }
  return {};
}

EcPoint ec_map(const State& s) { return {dynamics::hamiltonian(s), dynamics::casimir(s)}; }

bool in_image(const EcPoint& p) { return p.c >= -p.h && (p.h <= 0.0 || p.c >= std::sqrt(p.h)); }

RegionLabel classify(const EcPoint& p, double tol) {
  const double h = p.h;
  const double c = p.c;
  if (!std::isfinite(h) || !std::isfinite(c)) return RegionLabel::Outside;
  if (std::fabs(h) <= tol && std::fabs(c) <= tol) return RegionLabel::BifurcationPoint;

  // Boundary and separatrix curves first.
  if (h >= 0.0 && std::fabs(c - std::sqrt(h)) <= tol) return RegionLabel::Sigma12s;
  if (h <= 0.0 && std::fabs(c + h) <= tol) return RegionLabel::Sigma3s;
  if (h > 0.0 && std::fabs(c - std::sqrt(2.0 * h)) <= tol) return RegionLabel::Sigma45u;

  if (!in_image(p)) return RegionLabel::Outside;
  if (h < 0.0) return RegionLabel::SigmaP2;  // c > -h here
  // h = 0, c > 0 is attached to SigmaP2; it is the limit of both branches.
  if (c > std::sqrt(2.0 * h)) return RegionLabel::SigmaP2;
  return RegionLabel::SigmaP1;
}

std::vector<State> critical_points(double m) {
  std::vector<State> out;
  out.reserve(kFamilies.size());
  for (auto f : kFamilies) out.push_back(realize({f, m}));
  return out;
}

std::array<State, 2> dec(const State& s) {
  const auto g = dynamics::gradients(s);
  return {g.grad_h, g.grad_c};
}

SingularValues dec_singular_values(const State& s) {
  const auto [r1, r2] = dec(s);
  // sigma1^2 + sigma2^2 = |A|_F^2 and sigma1 * sigma2 = |r1 x r2|.
  const double frob2 = dot(r1, r1) + dot(r2, r2);
  const double area = norm(cross(r1, r2));
  if (frob2 == 0.0) return {0.0, 0.0};
  const double disc = std::sqrt(std::fmax(0.0, frob2 * frob2 - 4.0 * area * area));
  const double largest = std::sqrt(0.5 * (frob2 + disc));
  return {largest, area / largest};
}

int rank_dec(const State& s, double tol) {
  const auto sv = dec_singular_values(s);
  if (sv.largest == 0.0) return 0;
  return sv.smallest > tol * sv.largest ? 2 : 1;
}

EcPoint image_of_family(const EquilibriumFamily& f) {
  const double m2 = f.m * f.m;
  switch (f.family) {
    case Family::E1:
    case Family::E2: return {0.25 * m2 * m2, 0.5 * m2};
    case Family::E3: return {-0.5 * m2, 0.5 * m2};
    case Family::E4:
    case Family::E5: return {0.5 * m2 * m2, m2};
  }
  return {};
}

double distance_to_families(const State& s) {
  const auto [x, y, z] = s;
  const double d1 = std::hypot(y, z);
  const double d2 = std::hypot(x, z);
  const double d3 = std::hypot(x, y);
  // Lines through (1,1,0) and (1,-1,0).
  const double d4 = std::hypot((x - y) / std::sqrt(2.0), z);
  const double d5 = std::hypot((x + y) / std::sqrt(2.0), z);
  return std::min({d1, d2, d3, d4, d5});
}

void ScanRange::validate() const {
  for (double v : {h_min, h_max, c_min, c_max, tol})
    if (!std::isfinite(v)) throw InvalidArgument("scan bounds must be finite");
  if (resolution < 1) throw InvalidArgument("scan resolution must be at least 1");
  if (h_min > h_max || c_min > c_max) throw InvalidArgument("scan range has min > max");
  if (tol < 0.0) throw InvalidArgument("scan tolerance must be non-negative");
}

namespace {
std::vector<double> axis(double lo, double hi, int n) {
  if (lo == hi || n == 1) return {lo};
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}
}  // namespace

std::vector<ScanCell> scan_image(const ScanRange& range) {
  range.validate();
  const auto hs = axis(range.h_min, range.h_max, range.resolution);
  const auto cs = axis(range.c_min, range.c_max, range.resolution);
  std::vector<ScanCell> cells;
  cells.reserve(hs.size() * cs.size());
  for (double h : hs)
    for (double c : cs) cells.push_back({h, c, classify({h, c}, range.tol)});
  return cells;
}

}  // namespace biham::ecmap
