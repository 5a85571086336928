// Copyright 2026 The rwrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rwrange/potential.hpp"

namespace rwrange {
namespace {

// a(x) = (2 pi)^-2 \int\int (1 - cos(x.t)) / (1 - (cos t1 + cos t2)/2) dt,
// midpoint rule on an even grid so t = 0 is never sampled.
double fourier_kernel(std::int64_t x, std::int64_t y, int grid = 2000) {
  const double h = 2.0 * std::numbers::pi / grid;
  double sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t1 = -std::numbers::pi + (i + 0.5) * h;
    for (int j = 0; j < grid; ++j) {
      const double t2 = -std::numbers::pi + (j + 0.5) * h;
      sum += (1.0 - std::cos(x * t1 + y * t2)) / (1.0 - 0.5 * (std::cos(t1) + std::cos(t2)));
    }
  }
  return sum * h * h / (4.0 * std::numbers::pi * std::numbers::pi);
}

const PotentialKernel& kernel() {
  static const PotentialKernel k;
  return k;
}

TEST(PotentialKernel, ZeroAtOrigin) { EXPECT_EQ(kernel()({0, 0}), 0.0); }

TEST(PotentialKernel, UnitNeighbour) {
  EXPECT_NEAR(fourier_kernel(1, 0), 1.0, 1e-3);
  EXPECT_NEAR(kernel()({1, 0}), 1.0, 1e-3);
  EXPECT_NEAR(kernel()({0, -1}), 1.0, 1e-3);
}

TEST(PotentialKernel, Diagonal) {
  EXPECT_NEAR(fourier_kernel(1, 1), 4.0 / std::numbers::pi, 1e-3);
  EXPECT_NEAR(kernel()({1, 1}), 4.0 / std::numbers::pi, 1e-2);
}

TEST(PotentialKernel, MatchesFourierIntegral) {
  for (Cell z : {Cell{2, 0}, Cell{2, 1}, Cell{3, 3}, Cell{7, 2}, Cell{0, 12}}) {
    EXPECT_NEAR(kernel()(z), fourier_kernel(z.x, z.y), 1e-3) << z.x << "," << z.y;
  }
  EXPECT_NEAR(kernel()({2, 0}), 4.0 - 8.0 / std::numbers::pi, 1e-3);
}

TEST(PotentialKernel, HarmonicResidual) { EXPECT_LT(kernel().max_harmonic_residual(), 1e-6); }

TEST(PotentialKernel, ApproachesAsymptoticForm) {
  const double r = std::hypot(30.0, 40.0);
  EXPECT_NEAR(kernel()({30, 40}), PotentialKernel::asymptotic(r), 1e-4);
  EXPECT_NEAR(PotentialKernel::kappa(), 1.0293737, 1e-6);
}

TEST(PotentialKernel, Symmetric) {
  EXPECT_NEAR(kernel()({5, 3}), kernel()({-3, 5}), 1e-9);
  EXPECT_NEAR(kernel()({5, 3}), kernel()({3, -5}), 1e-9);
}

TEST(PotentialKernel, RejectsPointsOutsideSafeRegion) {
  EXPECT_THROW(kernel()({64, 0}), InvalidArgument);
  EXPECT_THROW(kernel()({50, 50}), InvalidArgument);
  EXPECT_NO_THROW(kernel()({63, 0}));
  EXPECT_THROW(PotentialKernel(2), InvalidArgument);
}

TEST(PotentialKernel, OneShotAgrees) { EXPECT_NEAR(potential_kernel({3, 1}, 64), kernel()({3, 1}), 1e-4); }

// Oracle: all 4^n paths enumerated explicitly.
double enumerate_hitting(const Box2& target, int n) {
  std::uint64_t hits = 0, total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::int64_t x = 0, y = 0;
    bool hit = target.contains({x, y});
    std::uint64_t c = code;
    for (int i = 0; i < n && !hit; ++i) {
      switch (c % 4) {
        case 0: ++x; break;
        case 1: --x; break;
        case 2: ++y; break;
        default: --y; break;
      }
      c /= 4;
      hit = target.contains({x, y});
    }
    hits += hit;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

TEST(BoxHitting, MatchesPathEnumeration) {
  for (Box2 box : {Box2{2, -1, 4, 1}, Box2{3, 3, 3, 3}, Box2{-5, 1, -2, 2}}) {
    const auto hp = box_hitting_probability(box, 9, 20);
    EXPECT_NEAR(hp.probability, enumerate_hitting(box, 9), 1e-12);
    EXPECT_EQ(hp.truncation_bound, 0.0);
  }
}

TEST(BoxHitting, TruncationBoundCoversLostMass) {
  const Box2 box{4, -1, 6, 1};
  const auto wide = box_hitting_probability(box, 10, 20);
  const auto tight = box_hitting_probability(box, 10, 7);
  EXPECT_GT(tight.truncation_bound, 0.0);
  EXPECT_LE(wide.probability - tight.probability, tight.truncation_bound + 1e-15);
  EXPECT_GE(wide.probability, tight.probability);
}

TEST(BoxHitting, OriginInsideTarget) {
  EXPECT_EQ(box_hitting_probability({-1, -1, 1, 1}, 5, 10).probability, 1.0);
}

TEST(LemmaCheck, NamesRoundTrip) {
  for (LemmaId id : kAllLemmas) EXPECT_EQ(parse_lemma_id(to_string(id)), id);
  EXPECT_THROW(parse_lemma_id("nope"), InvalidArgument);
}

TEST(LemmaCheck, AdjacentStartSmallRadiusIsPositive) {
  LemmaGridPoint g;
  g.z = {1, 0};
  g.large_r2 = SquaredRadius::of_integer(2);
  const auto report = lemma_check(LemmaId::kFromMToK, std::span(&g, 1), 4000, 11, 1);
  ASSERT_EQ(report.points.size(), 1u);
  EXPECT_GT(report.points[0].estimate - 3.0 * report.points[0].std_error, 0.0);
  EXPECT_TRUE(report.direction_holds);
}

TEST(LemmaCheck, HitSmallBeforeLargeStable) {
  std::vector<LemmaGridPoint> grid;
  for (std::int64_t z : {8, 16, 32}) {
    LemmaGridPoint g;
    g.z = {z, 0};
    g.small_r2 = SquaredRadius::of_integer(z / 2);
    g.large_r2 = SquaredRadius::of_integer(4 * z);
    grid.push_back(g);
  }
  const auto report = lemma_check(LemmaId::kHitRBeforeR, grid, 2000, 5, 1);
  EXPECT_TRUE(report.passed()) << report.band;
  EXPECT_LT(report.band, kLemmaBandLimit);
}

TEST(LemmaCheck, HypothesisViolationsAreSkipped) {
  LemmaGridPoint bad;
  bad.z = {4, 0};
  bad.large_r2 = SquaredRadius::of_integer(6);  // r < 2|z|
  LemmaGridPoint good;
  good.z = {1, 0};
  good.large_r2 = SquaredRadius::of_integer(8);
  const LemmaGridPoint grid[] = {bad, good};
  const auto report = lemma_check(LemmaId::kFromMToK, grid, 500, 3, 1);
  ASSERT_EQ(report.points.size(), 2u);
  EXPECT_TRUE(report.points[0].skipped);
  EXPECT_FALSE(report.points[0].skip_reason.empty());
  EXPECT_FALSE(report.points[1].skipped);

  LemmaGridPoint far;
  far.z = {10, 0};
  far.n = 16;
  far.k = 3;  // k^4 > n
  EXPECT_TRUE(lemma_check(LemmaId::kRHitsQ, std::span(&far, 1), 0, 1).points[0].skipped);
  LemmaGridPoint inside;
  inside.z = {2, 0};
  inside.n = 64;
  inside.small_r2 = SquaredRadius::of_integer(1);
  EXPECT_TRUE(lemma_check(LemmaId::kSqrtNToR, std::span(&inside, 1), 10, 1).points[0].skipped);
}

TEST(LemmaCheck, DefaultGridsRespectHypotheses) {
  for (LemmaId id : kAllLemmas) {
    if (id == LemmaId::kBoundaryInSquare) continue;  // covered by the acceptance run
    const auto grid = default_lemma_grid(id);
    const auto report = lemma_check(id, grid, id == LemmaId::kRHitsQ ? 0 : 600, 21, 1);
    for (const auto& p : report.points) EXPECT_FALSE(p.skipped) << to_string(id) << " " << p.label;
  }
}

TEST(LemmaCheck, IndependentOfThreadCount) {
  const auto grid = default_lemma_grid(LemmaId::kSqrtNToR);
  const auto a = lemma_check(LemmaId::kSqrtNToR, grid, 300, 9, 1);
  const auto b = lemma_check(LemmaId::kSqrtNToR, grid, 300, 9, 3);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].estimate, b.points[i].estimate);
  EXPECT_EQ(a.fitted_constant, b.fitted_constant);
}

TEST(LemmaCheck, ExactHitsDecayInDistance) {
  const auto report = lemma_check(LemmaId::kRHitsQ, default_lemma_grid(LemmaId::kRHitsQ), 0, 1);
  for (const auto& p : report.points) {
    EXPECT_TRUE(p.exact);
    EXPECT_LT(p.std_error, 1e-3 * p.estimate);
  }
  EXPECT_GT(report.fitted_exponent, 0.0);
}

TEST(OptionalStopping, MatchesKernelPrediction) {
  const auto check = optional_stopping_check(kernel(), {4, 0}, 16, 20000, 17);
  EXPECT_NEAR(check.mean_stopped_value, check.kernel_at_start, 3.0 * check.std_error + 1e-3);
  EXPECT_NEAR(check.hit_probability, check.predicted_hit_probability, 3.0 * check.hit_std_error + 1e-3);
}

}  // namespace
}  // namespace rwrange
