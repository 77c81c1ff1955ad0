// Copyright 2026 The biham Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "biham/ecmap.hpp"
#include "biham/error.hpp"
#include "biham/fibers.hpp"
#include "support.hpp"

using namespace biham;
using namespace biham::ecmap;
using biham::testing::Rng;

TEST_CASE("ec_map at equilibria") {
  CHECK(ec_map({0, 0, 0}) == EcPoint{0, 0});
  CHECK(ec_map({1, 1, 0}) == EcPoint{0.5, 1});
  CHECK(ec_map({0, 0, 1}) == EcPoint{-0.5, 0.5});
}

TEST_CASE("image membership") {
  CHECK(in_image({0.5, 1}));
  CHECK_FALSE(in_image({1, 0.5}));
  CHECK(in_image({-1, 1}));
  CHECK_FALSE(in_image({-1, 0.5}));
  // Midpoint of (1,1) and (0,0): the image is not convex.
  CHECK(in_image({1, 1}));
  CHECK(in_image({0, 0}));
  CHECK_FALSE(in_image({0.5, 0.5}));
}

TEST_CASE("classification of reference points") {
  CHECK(classify({0.5, 1}, 1e-9) == RegionLabel::Sigma45u);
  CHECK(classify({0, 0}) == RegionLabel::BifurcationPoint);
  CHECK(classify({-1, 2}) == RegionLabel::SigmaP2);
  CHECK(classify({0.64, 0.9}) == RegionLabel::SigmaP1);
  CHECK(classify({1, 1}) == RegionLabel::Sigma12s);
  CHECK(classify({-1, 1}) == RegionLabel::Sigma3s);
  CHECK(classify({1, 0.5}) == RegionLabel::Outside);
  CHECK(classify({0, 1}) == RegionLabel::SigmaP2);
  CHECK(classify({NAN, 1}) == RegionLabel::Outside);
  // Curve tolerance.
  CHECK(classify({1, 1 + 5e-10}, 1e-9) == RegionLabel::Sigma12s);
  CHECK(classify({1, 1 + 5e-9}, 1e-9) == RegionLabel::SigmaP1);
}

TEST_CASE("labeled grid of hand-placed points") {
  using L = RegionLabel;
  struct Row {
    double h, c;
    L expected;
  };
  const Row rows[] = {
      {2, 1.5, L::SigmaP1},       {2, 2.5, L::SigmaP2},      {2, 2, L::Sigma45u},
      {2, std::sqrt(2.0), L::Sigma12s}, {2, 1, L::Outside}, {-2, 2, L::Sigma3s},
      {-2, 3, L::SigmaP2},        {-2, 1, L::Outside},       {0.25, 0.5, L::Sigma12s},
      {0.25, 0.6, L::SigmaP1},    {0.25, 0.8, L::SigmaP2},   {0.25, 0.4, L::Outside},
      {0.125, 0.5, L::Sigma45u},  {-0.5, 0.5, L::Sigma3s},   {-0.5, 0.4, L::Outside},
      {-0.5, 0.7, L::SigmaP2},    {0.01, 0.1, L::Sigma12s},  {0.01, 0.12, L::SigmaP1},
      {0.01, 0.2, L::SigmaP2},    {0, 0, L::BifurcationPoint}, {0, 1, L::SigmaP2},
      {0, -1, L::Outside},        {1, 1.2, L::SigmaP1},      {1, 1.5, L::SigmaP2},
      {4, 2, L::Sigma12s},        {4, 2.5, L::SigmaP1},      {4, 3, L::SigmaP2},
      {8, 4, L::Sigma45u},        {-3, 0, L::Outside},       {-3, 3, L::Sigma3s},
  };
  for (const auto& r : rows) {
    CAPTURE(r.h);
    CAPTURE(r.c);
    CHECK(classify({r.h, r.c}) == r.expected);
    CHECK(in_image({r.h, r.c}) == (r.expected != L::Outside));
  }
}

TEST_CASE("label names round-trip") {
  for (auto l : {RegionLabel::Sigma12s, RegionLabel::Sigma3s, RegionLabel::Sigma45u, RegionLabel::SigmaP1,
                 RegionLabel::SigmaP2, RegionLabel::BifurcationPoint, RegionLabel::Outside}) {
    CHECK(parse_label(label_name(l)) == l);
  }
  for (auto f : kFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("E6").has_value());
}

TEST_CASE("critical points") {
  const auto pts = critical_points(1.0);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == State{1, 0, 0});
  CHECK(pts[1] == State{0, 1, 0});
  CHECK(pts[2] == State{0, 0, 1});
  CHECK(pts[3] == State{1, 1, 0});
  CHECK(pts[4] == State{1, -1, 0});
  for (const auto& p : critical_points(0.0)) CHECK(p == State{0, 0, 0});
  for (double m : {-2.0, 0.3, 1.7})
    for (const auto& p : critical_points(m)) CHECK(rank_dec(p) < 2);
}

TEST_CASE("rank of D(EC)") {
  CHECK(rank_dec({1, 1, 0}) == 1);
  CHECK(rank_dec({0, 0, 0}) == 0);
  // Oracle: rows (1,8,-3), (1,2,3) have 2x2 minors -6, 6, 30, not all zero.
  const auto rows = dec({1, 2, 3});
  CHECK(rows[0] == State{1, 8, -3});
  CHECK(rows[1] == State{1, 2, 3});
  CHECK(cross(rows[0], rows[1]) == State{30, -6, -6});
  CHECK(rank_dec({1, 2, 3}) == 2);
}

TEST_CASE("images of families") {
  CHECK(image_of_family({Family::E4, 1}) == EcPoint{0.5, 1});
  CHECK(image_of_family({Family::E3, 2}) == EcPoint{-2, 2});
  CHECK(image_of_family({Family::E1, 0}) == EcPoint{0, 0});
  Rng rng(41);
  for (int n = 0; n < 50; ++n) {
    const double m = rng.uniform(-3, 3);
    for (auto f : kFamilies) {
      const EcPoint a = image_of_family({f, m});
      const EcPoint b = ec_map(realize({f, m}));
      CHECK(std::fabs(a.h - b.h) <= 1e-14 * std::fmax(1.0, std::fabs(a.h)));
      CHECK(std::fabs(a.c - b.c) <= 1e-14 * std::fmax(1.0, std::fabs(a.c)));
    }
  }
}

TEST_CASE("every achieved (h,c) lies in the image") {
  Rng rng(43);
  int violations = 0;
  for (int n = 0; n < 100000; ++n) {
    const EcPoint p = ec_map(rng.state(-3, 3));
    if (!in_image(p) || classify(p) == RegionLabel::Outside) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("image membership is sharp") {
  Rng rng(47);
  int inside = 0;
  for (int n = 0; n < 1000; ++n) {
    const EcPoint p{rng.uniform(-2, 2), rng.uniform(-1, 3)};
    const auto pt = fibers::find_fiber_point(p.h, p.c);
    CAPTURE(p.h);
    CAPTURE(p.c);
    if (in_image(p)) {
      ++inside;
      REQUIRE(pt.has_value());
      CHECK(std::fabs(dynamics::hamiltonian(*pt) - p.h) <= 1e-9);
      CHECK(std::fabs(dynamics::casimir(*pt) - p.c) <= 1e-9);
    } else {
      CHECK_FALSE(pt.has_value());
    }
  }
  CHECK(inside > 200);
}

TEST_CASE("rank deficiency happens exactly on the five families") {
  int mismatches = 0;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j)
      for (int k = 0; k <= 40; ++k) {
        const State s{(i - 20) / 10.0, (j - 20) / 10.0, (k - 20) / 10.0};
        if ((rank_dec(s) < 2) != (distance_to_families(s) <= 1e-9)) ++mismatches;
      }
  CHECK(mismatches == 0);
}

TEST_CASE("grid scan") {
  SUBCASE("default window") {
    ScanRange r;
    const auto cells = scan_image(r);
    CHECK(cells.size() == 100 * 100);
    for (const auto& c : cells)
      if (in_image({c.h, c.c})) CHECK(c.label != RegionLabel::Outside);
  }
  SUBCASE("degenerate h range is one column") {
    ScanRange r;
    r.h_min = r.h_max = 0.25;
    r.resolution = 7;
    const auto cells = scan_image(r);
    CHECK(cells.size() == 7);
    for (const auto& c : cells) CHECK(c.h == 0.25);
    CHECK(cells.front().c == r.c_min);
    CHECK(cells.back().c == r.c_max);
  }
  SUBCASE("invalid ranges") {
    ScanRange r;
    r.resolution = 0;
    CHECK_THROWS_AS(scan_image(r), InvalidArgument);
    r.resolution = 10;
    r.h_min = 3;
    CHECK_THROWS_AS(scan_image(r), InvalidArgument);
  }
}
