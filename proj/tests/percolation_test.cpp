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
#include <set>

#include "rwrange/percolation.hpp"
#include "rwrange/stats.hpp"

namespace rwrange {
namespace {

TEST(FractalTree, LevelOneUsesFourFairFlags) {
  EXPECT_DOUBLE_EQ(retention_probability(1), 0.5);
  std::uint64_t kept = 0;
  const std::uint64_t reps = 20000;
  for (std::uint64_t i = 0; i < reps; ++i) {
    auto rng = derive_stream(3, i);
    const PercolationTree t = sample_fractal(1, rng);
    EXPECT_EQ(t.examined_count(1), 4u);
    EXPECT_EQ(rng.counter(), 4u);
    kept += t.retained_count(1);
  }
  const Summary s = summarize_proportion(kept, 4 * reps);
  EXPECT_NEAR(s.mean, 0.5, 3.0 * s.std_error);
}

TEST(FractalTree, ChildrenOnlyUnderRetainedParents) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = derive_stream(8, i);
    const PercolationTree t = sample_fractal(6, rng);
    for (int k = 1; k <= 6; ++k) {
      std::set<Cell> parents(t.retained(k - 1).begin(), t.retained(k - 1).end());
      for (const Cell& c : t.retained(k)) {
        EXPECT_TRUE(parents.contains({c.x / 2, c.y / 2}));
        EXPECT_LT(c.x, std::int64_t{1} << k);
        EXPECT_LT(c.y, std::int64_t{1} << k);
      }
    }
  }
}

TEST(FractalTree, MeanRetainedCountTelescopes) {
  const int depth = 5;
  const std::uint64_t reps = 10000;
  std::vector<std::vector<double>> counts(depth + 1);
  for (std::uint64_t i = 0; i < reps; ++i) {
    auto rng = derive_stream(12, i);
    const PercolationTree t = sample_fractal(depth, rng);
    for (int k = 1; k <= depth; ++k) counts[k].push_back(static_cast<double>(t.retained_count(k)));
  }
  for (int k = 1; k <= depth; ++k) {
    const Summary s = summarize(counts[k]);
    EXPECT_NEAR(s.mean, std::ldexp(1.0, 2 * k) / (k + 1), 3.0 * s.std_error) << k;
  }
}

TEST(FractalTree, SurvivalIsNontrivial) {
  std::uint64_t alive = 0;
  const std::uint64_t reps = 10000;
  for (std::uint64_t i = 0; i < reps; ++i) {
    auto rng = derive_stream(4, i);
    alive += !sample_fractal(6, rng).empty();
  }
  EXPECT_GT(alive, 0u);
  EXPECT_LT(alive, reps);
}

TEST(FractalTree, ReproducibleFromStream) {
  auto a = derive_stream(99, 5), b = derive_stream(99, 5);
  EXPECT_EQ(sample_fractal(7, a).leaves(), sample_fractal(7, b).leaves());
}

TEST(FractalTree, RemovingAFlagShrinksTheSet) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    auto rng = derive_stream(21, i);
    const PercolationTree t = sample_fractal(5, rng);
    for (int k = 1; k <= 5; ++k) {
      if (t.retained(k).empty()) continue;
      const PercolationTree smaller = t.without(k, t.retained(k).front());
      EXPECT_EQ(smaller.retained_count(k) + 1, t.retained_count(k));
      for (const Cell& c : smaller.leaves()) EXPECT_TRUE(t.contains_cell(c));
      EXPECT_LE(smaller.leaves().size(), t.leaves().size());
    }
  }
  auto rng = derive_stream(1, 1);
  const PercolationTree t = sample_fractal(3, rng);
  EXPECT_THROW(t.without(0, {0, 0}), InvalidArgument);
}

TEST(TreeLogProb, LevelOneExtremes) {
  PercolationTree all(1), none(1);
  // Find samples with all four kept and all four dropped.
  bool seen_all = false, seen_none = false;
  for (std::uint64_t i = 0; i < 500 && !(seen_all && seen_none); ++i) {
    auto rng = derive_stream(0, i);
    const PercolationTree t = sample_fractal(1, rng);
    if (t.retained_count(1) == 4) {
      all = t;
      seen_all = true;
    }
    if (t.retained_count(1) == 0) {
      none = t;
      seen_none = true;
    }
  }
  ASSERT_TRUE(seen_all && seen_none);
  EXPECT_DOUBLE_EQ(tree_log_prob(all), 4.0);
  EXPECT_DOUBLE_EQ(tree_log_prob(none), 4.0);
}

// Oracle: every level-1 and level-2 outcome enumerated with its probability.
TEST(TreeLogProb, ExactEntropyByEnumeration) {
  const double p1 = 0.5, p2 = 2.0 / 3.0;
  double h = 0.0;
  for (int kept1 = 0; kept1 <= 4; ++kept1) {
    const double ways1 = std::tgamma(5) / (std::tgamma(kept1 + 1) * std::tgamma(5 - kept1));
    const double pr1 = std::pow(p1, kept1) * std::pow(1 - p1, 4 - kept1);
    const int flags = 4 * kept1;
    for (int kept2 = 0; kept2 <= flags; ++kept2) {
      const double ways2 = std::tgamma(flags + 1) / (std::tgamma(kept2 + 1) * std::tgamma(flags - kept2 + 1));
      const double pr2 = std::pow(p2, kept2) * std::pow(1 - p2, flags - kept2);
      h -= ways1 * ways2 * pr1 * pr2 * std::log2(pr1 * pr2);
    }
  }
  EXPECT_NEAR(exact_tree_entropy(2), h, 1e-9);
}

TEST(TreeLogProb, ClosedFormValues) {
  EXPECT_DOUBLE_EQ(exact_tree_entropy(1), 4.0);
  EXPECT_NEAR(binary_entropy(2.0 / 3.0), 0.918296, 1e-6);
  EXPECT_NEAR(binary_entropy(0.75), 0.811278, 1e-6);
  EXPECT_NEAR(exact_tree_entropy(2), 11.3464, 1e-4);
  EXPECT_NEAR(exact_tree_entropy(3), 28.6537, 1e-4);
  EXPECT_THROW(exact_tree_entropy(0), InvalidArgument);
}

TEST(TreeLogProb, SampleMeanMatchesEntropy) {
  const std::uint64_t reps = 100000;
  std::vector<double> bits;
  bits.reserve(reps);
  for (std::uint64_t i = 0; i < reps; ++i) {
    auto rng = derive_stream(31, i);
    bits.push_back(tree_log_prob(sample_fractal(3, rng)));
  }
  const Summary s = summarize(bits);
  EXPECT_NEAR(s.mean, exact_tree_entropy(3), 3.0 * s.std_error);
}

TEST(TreeEntropy, ScalesLikeAreaOverLogSquared) {
  std::vector<double> norm;
  for (int L = 4; L <= 10; ++L) norm.push_back(exact_tree_entropy(L) * L * L / std::ldexp(1.0, 2 * L));
  EXPECT_LT(band_ratio(norm), 4.0);
}

TEST(Targets, ParseAndFormat) {
  for (const char* text : {"point(3,4)", "ball(10,12,5)", "rect(0,1,2,3)"}) {
    EXPECT_EQ(TargetSet::parse(text).to_string(), text);
  }
  EXPECT_EQ(TargetSet::parse(" ball( 1, 2 ,3 ) ").to_string(), "ball(1,2,3)");
  EXPECT_THROW(TargetSet::parse("ball(1,2)"), InvalidArgument);
  EXPECT_THROW(TargetSet::parse("disk(1,2,3)"), InvalidArgument);
  EXPECT_THROW(TargetSet::parse("point(1,x)"), InvalidArgument);
  EXPECT_THROW(TargetSet::rect(3, 0, 2, 0), InvalidArgument);
}

TEST(Targets, BallMembership) {
  const TargetSet b = TargetSet::ball(5, 5, 2);
  EXPECT_TRUE(b.contains({7, 5}));
  EXPECT_TRUE(b.contains({6, 6}));
  EXPECT_FALSE(b.contains({7, 6}));
}

TEST(Intersection, StartCellIsAlwaysHitByWalk) {
  const auto e = intersection_ratio(TargetSet::point(32, 32), 6, 1000, 5, 1);
  EXPECT_EQ(e.p_walk, 1.0);
  EXPECT_EQ(e.se_walk, 0.0);
}

TEST(Intersection, RejectsBadInput) {
  EXPECT_THROW(intersection_ratio(TargetSet::point(64, 0), 6, 1000, 1), InvalidArgument);
  EXPECT_THROW(intersection_ratio(TargetSet::point(1, 1), 6, 10, 1), InvalidArgument);
  EXPECT_THROW(intersection_ratios({}, 6, 1000, 1), InvalidArgument);
}

TEST(Intersection, ZeroProbabilityLeavesRatioUnavailable) {
  const TargetSet a = TargetSet::point(1, 1);
  const auto none = estimate_from_counts(a, 4, 1000, 0, 120, 0);
  EXPECT_FALSE(none.ratio.has_value());
  EXPECT_DOUBLE_EQ(none.p_fractal, 0.12);
  EXPECT_GT(none.se_fractal, 0.0);
  EXPECT_FALSE(estimate_from_counts(a, 4, 1000, 0, 0, 40).ratio.has_value());
  const auto both = estimate_from_counts(a, 4, 1000, 0, 200, 400);
  ASSERT_TRUE(both.ratio.has_value());
  EXPECT_DOUBLE_EQ(*both.ratio, 0.5);
  EXPECT_LT(both.ci_low, 0.5);
  EXPECT_GT(both.ci_high, 0.5);
}

TEST(Intersection, SharedSamplesMatchSeparateRuns) {
  const auto targets = default_targets(5);
  const auto together = intersection_ratios(targets, 5, 1000, 17, 1);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const auto alone = intersection_ratio(targets[t], 5, 1000, 17, 2);
    EXPECT_EQ(alone.p_fractal, together[t].p_fractal);
    EXPECT_EQ(alone.p_walk, together[t].p_walk);
  }
}

TEST(Intersection, QuarterDistanceRatioInBand) {
  const auto e = intersection_ratio(TargetSet::point(96, 64), 7, 4000, 23, 1);
  ASSERT_TRUE(e.ratio.has_value());
  EXPECT_GT(*e.ratio, 1.0 / 20.0);
  EXPECT_LT(*e.ratio, 20.0);
}

}  // namespace
}  // namespace rwrange
