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


// Fractal percolation on the square [0, 2^L)^2 and its intersection
// behaviour against a planar random walk range.
//
// Level-k squares have side 2^(L-k) and are addressed by (x, y) in
// [0, 2^k)^2. A retained level-(k-1) square splits into four level-k
// children, each kept independently with probability k / (k+1).

#ifndef RWRANGE_PERCOLATION_HPP
#define RWRANGE_PERCOLATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwrange/planar.hpp"
#include "rwrange/rng.hpp"

namespace rwrange {

inline constexpr int kMaxPercolationDepth = 15;
inline constexpr std::uint64_t kMinIntersectionReps = 1000;

/// Keep probability of a level-k flag, k >= 1.
double retention_probability(int k);

class PercolationTree {
 public:
  explicit PercolationTree(int depth);

  int depth() const noexcept { return depth_; }
  std::int64_t side() const noexcept { return std::int64_t{1} << depth_; }

  /// Retained squares of level k (0 <= k <= depth), row-major: y, then x.
  /// Level 0 is the root and is always retained.
  const std::vector<Cell>& retained(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  std::size_t retained_count(int k) const { return retained(k).size(); }
  /// Flags drawn at level k, i.e. four per retained level-(k-1) square.
  std::size_t examined_count(int k) const { return k == 0 ? 0 : 4 * retained_count(k - 1); }

  /// Retained level-`depth` unit cells; their union is the percolation set.
  const std::vector<Cell>& leaves() const { return levels_.back(); }
  bool contains_cell(const Cell& c) const;
  bool empty() const { return leaves().empty(); }

  /// The tree with square `node` of level k and all its descendants
  /// dropped. Throws if that square is not retained.
  PercolationTree without(int k, const Cell& node) const;

 private:
  friend PercolationTree sample_fractal(int depth, RngStream& rng);

  int depth_;
  std::vector<std::vector<Cell>> levels_;
};

/// Level by level; children of each retained parent are drawn in the order
/// (0,0), (1,0), (0,1), (1,1) relative to (2x, 2y), one uniform per flag.
PercolationTree sample_fractal(int depth, RngStream& rng);

/// -log2 of the probability of drawing exactly this tree.
double tree_log_prob(const PercolationTree& tree);

/// sum_{k=1}^{L} (4^k / k) h(k / (k+1)), the entropy of the decision tree.
double exact_tree_entropy(int depth);

/// Binary entropy in bits.
double binary_entropy(double p);

/// A target cell set inside [0, n)^2, written point(x,y), ball(x,y,r) or
/// rect(x0,y0,x1,y1). Balls are Euclidean and include their rim.
class TargetSet {
 public:
  enum class Kind { kPoint, kBall, kRect };

  static TargetSet point(std::int64_t x, std::int64_t y);
  static TargetSet ball(std::int64_t x, std::int64_t y, std::int64_t r);
  static TargetSet rect(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1);
  static TargetSet parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  bool contains(const Cell& c) const;
  Box2 bounds() const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::kPoint;
  std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
};

struct IntersectionEstimate {
  TargetSet target;
  int depth = 0;
  std::uint64_t reps = 0;
  std::uint64_t master_seed = 0;
  double p_fractal = 0.0;
  double se_fractal = 0.0;
  double p_walk = 0.0;
  double se_walk = 0.0;
  /// Q/R ratio and its delta-method standard error; empty when either
  /// probability is estimated as zero.
  std::optional<double> ratio;
  double ratio_se = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/// Builds an estimate from hit counts out of `reps` trees and walks.
IntersectionEstimate estimate_from_counts(const TargetSet& target, int depth, std::uint64_t reps,
                                          std::uint64_t master_seed, std::uint64_t fractal_hits,
                                          std::uint64_t walk_hits);

/// Estimates Pr[Q meets A] and Pr[R(n^2) meets A] for every target with
/// the same samples: replica i draws its tree from
/// derive_stream(mix_seed(seed, 1), i) and its walk, started at the centre
/// cell (n/2, n/2), from derive_stream(mix_seed(seed, 2), i).
std::vector<IntersectionEstimate> intersection_ratios(std::span<const TargetSet> targets, int depth,
                                                      std::uint64_t reps, std::uint64_t master_seed,
                                                      unsigned threads = 0);
IntersectionEstimate intersection_ratio(const TargetSet& target, int depth, std::uint64_t reps,
                                        std::uint64_t master_seed, unsigned threads = 0);

/// Points at distances n/8, n/4, 3n/8 to the right of the centre and balls
/// of radius n/16, n/8, n/4 centred at (n/4, n/2).
std::vector<TargetSet> default_targets(int depth);

}  // namespace rwrange

#endif  // RWRANGE_PERCOLATION_HPP
