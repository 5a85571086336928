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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <set>

#include "rwrange/entropy.hpp"
#include "rwrange/range_set.hpp"

namespace rwrange {
namespace {

using boost::multiprecision::cpp_int;

// Brute-force oracle: enumerate trajectories by counting in base 2d and
// build each range from scratch with std::set.
std::map<std::vector<LatticePoint>, std::uint64_t> brute_force_ranges(int d, int n) {
  std::map<std::vector<LatticePoint>, std::uint64_t> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(2 * d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::set<LatticePoint> seen;
    LatticePoint p = LatticePoint::origin(d);
    seen.insert(p);
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      p.step(static_cast<int>(c % static_cast<std::uint64_t>(2 * d)));
      c /= static_cast<std::uint64_t>(2 * d);
      seen.insert(p);
    }
    ++out[std::vector<LatticePoint>(seen.begin(), seen.end())];
  }
  return out;
}

double entropy_bits(const std::map<std::vector<LatticePoint>, std::uint64_t>& counts) {
  double total = 0;
  for (auto& [k, c] : counts) total += static_cast<double>(c);
  double h = 0;
  for (auto& [k, c] : counts) h -= (c / total) * std::log2(c / total);
  return h;
}

TEST(ExactEntropy, TinyCases) {
  EXPECT_DOUBLE_EQ(exact_range_entropy(2, 0).value, 0.0);
  EXPECT_NEAR(exact_range_entropy(2, 1).value, 2.0, 1e-12);
  EXPECT_NEAR(exact_range_entropy(1, 2).value, 2.0, 1e-12);
  EXPECT_EQ(exact_range_entropy(2, 1).kind, EstimateKind::kExact);
}

TEST(ExactEntropy, OneDimensionalTwoStepRanges) {
  const auto dist = enumerate_ranges(1, 2);
  ASSERT_EQ(dist.entries.size(), 4u);
  for (const auto& e : dist.entries) EXPECT_EQ(e.count, 1u);
  std::set<std::vector<LatticePoint>> ranges;
  for (const auto& e : dist.entries) ranges.insert(e.points);
  EXPECT_TRUE(ranges.contains({LatticePoint{0}, LatticePoint{1}, LatticePoint{2}}));
  EXPECT_TRUE(ranges.contains({LatticePoint{0}, LatticePoint{1}}));
  EXPECT_TRUE(ranges.contains({LatticePoint{-1}, LatticePoint{0}}));
  EXPECT_TRUE(ranges.contains({LatticePoint{-2}, LatticePoint{-1}, LatticePoint{0}}));
}

TEST(ExactEntropy, MatchesBruteForce) {
  for (auto [d, n] : {std::pair{1, 10}, {2, 6}, {3, 4}}) {
    const auto oracle = brute_force_ranges(d, n);
    const auto dist = enumerate_ranges(d, static_cast<std::uint64_t>(n));
    ASSERT_EQ(dist.entries.size(), oracle.size());
    for (const auto& e : dist.entries) EXPECT_EQ(oracle.at(e.points), e.count);
    EXPECT_NEAR(exact_range_entropy(d, static_cast<std::uint64_t>(n)).value, entropy_bits(oracle), 1e-9);
  }
}

TEST(ExactEntropy, ProbabilityMassIsExact) {
  const auto dist = enumerate_ranges(2, 7);
  std::uint64_t mass = 0;
  for (const auto& e : dist.entries) mass += e.count;
  EXPECT_EQ(mass, dist.total);
  EXPECT_EQ(dist.total, 16384u);
}

TEST(ExactEntropy, BoundedByLogTrajectoryCount) {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const double h = exact_range_entropy(d, n).value;
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, static_cast<double>(n) * std::log2(2.0 * d) + 1e-12);
    }
  }
}

TEST(ExactEntropy, RefusesOverBudget) {
  EXPECT_THROW(exact_range_entropy(2, 14), BudgetExceeded);
  EXPECT_THROW(exact_range_entropy(2, 5, 1000), BudgetExceeded);
}

TEST(ExactEntropy, RangeProbabilityBoundedByBoundary) {
  // p_n(A) <= (1 - 1/2d)^{|dA| - 1}, checked in exact integer arithmetic.
  for (std::uint64_t n = 0; n <= 6; ++n) {
    const auto dist = enumerate_ranges(2, n);
    for (const auto& e : dist.entries) {
      RangeSet a(2);
      for (const auto& p : e.points) a.insert(p);
      const unsigned b = static_cast<unsigned>(inner_boundary(a).size());
      const cpp_int lhs = cpp_int(e.count) * boost::multiprecision::pow(cpp_int(4), b - 1);
      const cpp_int rhs = boost::multiprecision::pow(cpp_int(3), b - 1) * cpp_int(dist.total);
      EXPECT_LE(lhs, rhs);
    }
  }
}

TEST(BoundaryLowerBound, Coefficient) {
  EXPECT_NEAR(boundary_bits_per_point(2), 0.4150374992788438, 1e-15);
  const std::vector<double> ones(10, 1.0);
  EXPECT_DOUBLE_EQ(boundary_lower_bound(2, 5, ones).value, 0.0);
  const std::vector<double> one_sample{3.0};
  EXPECT_THROW(boundary_lower_bound(2, 5, one_sample), InvalidArgument);
  EXPECT_THROW(boundary_lower_bound(2, 5, {}), InvalidArgument);
}

TEST(BoundaryLowerBound, BelowExactEntropyAtSixSteps) {
  std::vector<double> sizes;
  for (std::uint64_t i = 0; i < 4000; ++i) {
    RngStream rng = derive_stream(9, i);
    sizes.push_back(static_cast<double>(inner_boundary(range_of(simulate_walk(2, 6, rng))).size()));
  }
  const auto lb = boundary_lower_bound(2, 6, sizes);
  EXPECT_LE(lb.value - 3 * lb.std_error, exact_range_entropy(2, 6).value);
}

TEST(CodecUpperBound, Basics) {
  const std::vector<CodeLengthSample> same{{8, 40}, {8, 40}, {8, 40}};
  EXPECT_DOUBLE_EQ(codec_upper_bound(same).value, 40.0);
  EXPECT_DOUBLE_EQ(codec_upper_bound(same).std_error, 0.0);
  const std::vector<CodeLengthSample> mixed{{8, 40}, {9, 40}};
  EXPECT_THROW(codec_upper_bound(mixed), InvalidArgument);
  EXPECT_THROW(codec_upper_bound({}), InvalidArgument);
}

TEST(CodecUpperBound, DominatesExactEntropyAtEightSteps) {
  std::vector<CodeLengthSample> samples;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RngStream rng = derive_stream(10, i);
    samples.push_back({8, observe_range(2, 8, rng).code_bits});
  }
  const auto ub = codec_upper_bound(samples);
  EXPECT_GE(ub.value + 3 * ub.std_error, exact_range_entropy(2, 8).value);
}

TEST(ScalingExperiment, RowsAndNormalisation) {
  const std::vector<std::uint64_t> grid{64, 256};
  const auto rows = scaling_experiment(2, grid, 40, 3);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.reps, 40u);
    EXPECT_GT(r.upper.value, r.lower.value);
    const double l = std::log2(static_cast<double>(r.n));
    EXPECT_NEAR(r.normalized_lower(), r.lower.value * l * l / static_cast<double>(r.n), 1e-12);
    EXPECT_GE(r.mean_range, r.mean_boundary);
  }
  EXPECT_THROW(scaling_experiment(2, grid, 29, 3), InvalidArgument);
  const auto d3 = scaling_experiment(3, grid, 30, 3);
  EXPECT_TRUE(std::isnan(d3[0].upper.value));
}

TEST(ScalingExperiment, Deterministic) {
  const std::vector<std::uint64_t> grid{128};
  const auto a = scaling_experiment(2, grid, 30, 77, 1);
  const auto b = scaling_experiment(2, grid, 30, 77, 3);
  EXPECT_EQ(a[0].lower.value, b[0].lower.value);
  EXPECT_EQ(a[0].upper.value, b[0].upper.value);
  EXPECT_EQ(a[0].mean_range, b[0].mean_range);
}

}  // namespace
}  // namespace rwrange
