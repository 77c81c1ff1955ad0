// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "biham/dynamics.hpp"

namespace biham::ecmap {

// Strata of the image of the energy-Casimir map.
//   Sigma12s: c = sqrt(h), h >= 0        (images of E1, E2)
//   Sigma3s:  c = -h, h <= 0             (images of E3)
//   Sigma45u: c = sqrt(2h), h > 0        (images of E4, E5)
//   SigmaP1:  sqrt(h) < c < sqrt(2h), h > 0
//   SigmaP2:  c > -h for h < 0, or c > sqrt(2h) for h >= 0
enum class RegionLabel { Sigma12s, Sigma3s, Sigma45u, SigmaP1, SigmaP2, BifurcationPoint, Outside };

std::string_view label_name(RegionLabel l);
std::optional<RegionLabel> parse_label(std::string_view name);

enum class Family { E1, E2, E3, E4, E5 };

inline constexpr std::array<Family, 5> kFamilies = {Family::E1, Family::E2, Family::E3, Family::E4, Family::E5};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct EquilibriumFamily {
  Family family = Family::E1;
  double m = 0.0;
};

// E1 -> (M,0,0), E2 -> (0,M,0), E3 -> (0,0,M), E4 -> (M,M,0), E5 -> (M,-M,0)
State realize(const EquilibriumFamily& f);

inline constexpr double kDefaultTol = 1e-9;

EcPoint ec_map(const State& s);

// c >= -h and (h <= 0 or c >= sqrt(h)).
bool in_image(const EcPoint& p);

// The unique stratum containing p. Curve membership uses the absolute
// tolerance tol and is tested before the open regions; the origin is
// reported as BifurcationPoint.
RegionLabel classify(const EcPoint& p, double tol = kDefaultTol);

// The five family representatives at parameter M, in family order.
std::vector<State> critical_points(double m);

// Rows of D(EC) = (grad H; grad C).
std::array<State, 2> dec(const State& s);

struct SingularValues {
  double largest = 0.0;
  double smallest = 0.0;
};
SingularValues dec_singular_values(const State& s);

// Numerical rank of D(EC): number of singular values above tol * largest.
int rank_dec(const State& s, double tol = kDefaultTol);

// Closed-form image of a family member.
EcPoint image_of_family(const EquilibriumFamily& f);

// Euclidean distance from s to the nearest of the five family lines.
double distance_to_families(const State& s);

struct ScanCell {
  double h = 0.0;
  double c = 0.0;
  RegionLabel label = RegionLabel::Outside;
};

struct ScanRange {
  double h_min = -2.0, h_max = 2.0;
  double c_min = 0.0, c_max = 3.0;
  int resolution = 100;
  double tol = kDefaultTol;

  // Throws InvalidArgument for resolution < 1, min > max or non-finite bounds.
  void validate() const;
};

// Row-major over h (outer) and c (inner). A degenerate axis (min == max)
// contributes a single value.
std::vector<ScanCell> scan_image(const ScanRange& range);

}  // namespace biham::ecmap
