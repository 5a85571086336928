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


#include "rwrange/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "rwrange/lattice.hpp"
#include "rwrange/stats.hpp"

namespace rwrange {
namespace {

bool row_major_less(const Cell& a, const Cell& b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

void check_depth(int depth) {
  if (depth < 1 || depth > kMaxPercolationDepth) throw InvalidArgument("depth out of range");
}

}  // namespace

double retention_probability(int k) { return static_cast<double>(k) / static_cast<double>(k + 1); }

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

PercolationTree::PercolationTree(int depth) : depth_(depth) {
  check_depth(depth);
  levels_.resize(static_cast<std::size_t>(depth) + 1);
  levels_[0].push_back({0, 0});
}

bool PercolationTree::contains_cell(const Cell& c) const {
  return std::binary_search(leaves().begin(), leaves().end(), c, row_major_less);
}

PercolationTree PercolationTree::without(int k, const Cell& node) const {
  if (k < 1 || k > depth_) throw InvalidArgument("level out of range");
  const auto& level = retained(k);
  if (!std::binary_search(level.begin(), level.end(), node, row_major_less)) {
    throw InvalidArgument("square is not retained");
  }
  PercolationTree out = *this;
  for (int j = k; j <= depth_; ++j) {
    const int shift = j - k;
    auto& cells = out.levels_[static_cast<std::size_t>(j)];
    std::erase_if(cells, [&](const Cell& c) { return (c.x >> shift) == node.x && (c.y >> shift) == node.y; });
  }
  return out;
}

PercolationTree sample_fractal(int depth, RngStream& rng) {
  PercolationTree tree(depth);
  for (int k = 1; k <= depth; ++k) {
    const double p = retention_probability(k);
    auto& next = tree.levels_[static_cast<std::size_t>(k)];
    for (const Cell& parent : tree.levels_[static_cast<std::size_t>(k) - 1]) {
      for (std::int64_t dy = 0; dy < 2; ++dy) {
        for (std::int64_t dx = 0; dx < 2; ++dx) {
          if (rng.bernoulli(p)) next.push_back({2 * parent.x + dx, 2 * parent.y + dy});
        }
      }
    }
    std::sort(next.begin(), next.end(), row_major_less);
  }
  return tree;
}

double tree_log_prob(const PercolationTree& tree) {
  double bits = 0.0;
  for (int k = 1; k <= tree.depth(); ++k) {
    const double p = retention_probability(k);
    const auto kept = static_cast<double>(tree.retained_count(k));
    const auto dropped = static_cast<double>(tree.examined_count(k)) - kept;
    bits -= kept * std::log2(p) + dropped * std::log2(1.0 - p);
  }
  return bits;
}

double exact_tree_entropy(int depth) {
  check_depth(depth);
  double h = 0.0;
  for (int k = 1; k <= depth; ++k) h += std::ldexp(1.0, 2 * k) / k * binary_entropy(retention_probability(k));
  return h;
}

// ---------------------------------------------------------------------------
// Targets

TargetSet TargetSet::point(std::int64_t x, std::int64_t y) {
  TargetSet t;
  t.kind_ = Kind::kPoint;
  t.a_ = x;
  t.b_ = y;
  return t;
}

TargetSet TargetSet::ball(std::int64_t x, std::int64_t y, std::int64_t r) {
  if (r < 0) throw InvalidArgument("negative radius");
  TargetSet t;
  t.kind_ = Kind::kBall;
  t.a_ = x;
  t.b_ = y;
  t.c_ = r;
  return t;
}

TargetSet TargetSet::rect(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
  if (x1 < x0 || y1 < y0) throw InvalidArgument("empty rectangle");
  TargetSet t;
  t.kind_ = Kind::kRect;
  t.a_ = x0;
  t.b_ = y0;
  t.c_ = x1;
  t.d_ = y1;
  return t;
}

TargetSet TargetSet::parse(const std::string& text) {
  static const std::regex re(R"(\s*(point|ball|rect)\s*\(([^)]*)\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidArgument("bad target '" + text + "'");
  std::vector<std::int64_t> args;
  const std::string list = m[2];
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    try {
      std::size_t used = 0;
      const std::string item = list.substr(pos, comma - pos);
      args.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad target '" + text + "'");
    }
    pos = comma + 1;
  }
  const std::string kind = m[1];
  const std::size_t want = kind == "point" ? 2 : kind == "ball" ? 3 : 4;
  if (args.size() != want) throw InvalidArgument("bad target '" + text + "'");
  if (kind == "point") return point(args[0], args[1]);
  if (kind == "ball") return ball(args[0], args[1], args[2]);
  return rect(args[0], args[1], args[2], args[3]);
}

bool TargetSet::contains(const Cell& c) const {
  switch (kind_) {
    case Kind::kPoint: return c.x == a_ && c.y == b_;
    case Kind::kBall: return (c.x - a_) * (c.x - a_) + (c.y - b_) * (c.y - b_) <= c_ * c_;
    case Kind::kRect: return c.x >= a_ && c.x <= c_ && c.y >= b_ && c.y <= d_;
  }
  return false;
}

Box2 TargetSet::bounds() const {
  switch (kind_) {
    case Kind::kPoint: return {a_, b_, a_, b_};
    case Kind::kBall: return {a_ - c_, b_ - c_, a_ + c_, b_ + c_};
    case Kind::kRect: return {a_, b_, c_, d_};
  }
  return {};
}

std::string TargetSet::to_string() const {
  auto s = [](std::int64_t v) { return std::to_string(v); };
  switch (kind_) {
    case Kind::kPoint: return "point(" + s(a_) + "," + s(b_) + ")";
    case Kind::kBall: return "ball(" + s(a_) + "," + s(b_) + "," + s(c_) + ")";
    case Kind::kRect: return "rect(" + s(a_) + "," + s(b_) + "," + s(c_) + "," + s(d_) + ")";
  }
  return {};
}

std::vector<TargetSet> default_targets(int depth) {
  check_depth(depth);
  if (depth < 4) throw InvalidArgument("default targets need depth >= 4");
  const std::int64_t n = std::int64_t{1} << depth, c = n / 2;
  return {TargetSet::point(c + n / 8, c),      TargetSet::point(c + n / 4, c),
          TargetSet::point(c + 3 * n / 8, c),  TargetSet::ball(n / 4, c, n / 16),
          TargetSet::ball(n / 4, c, n / 8),    TargetSet::ball(n / 4, c, n / 4)};
}

// ---------------------------------------------------------------------------
// Intersection estimates

IntersectionEstimate estimate_from_counts(const TargetSet& target, int depth, std::uint64_t reps,
                                          std::uint64_t master_seed, std::uint64_t fractal_hits,
                                          std::uint64_t walk_hits) {
  IntersectionEstimate e;
  e.target = target;
  e.depth = depth;
  e.reps = reps;
  e.master_seed = master_seed;
  const Summary sq = summarize_proportion(fractal_hits, reps), sr = summarize_proportion(walk_hits, reps);
  e.p_fractal = sq.mean;
  e.se_fractal = sq.std_error;
  e.p_walk = sr.mean;
  e.se_walk = sr.std_error;
  if (fractal_hits > 0 && walk_hits > 0) {
    const double ratio = e.p_fractal / e.p_walk;
    e.ratio = ratio;
    e.ratio_se = ratio * std::hypot(e.se_fractal / e.p_fractal, e.se_walk / e.p_walk);
    e.ci_low = ratio - 1.96 * e.ratio_se;
    e.ci_high = ratio + 1.96 * e.ratio_se;
  }
  return e;
}

std::vector<IntersectionEstimate> intersection_ratios(std::span<const TargetSet> targets, int depth,
                                                      std::uint64_t reps, std::uint64_t master_seed,
                                                      unsigned threads) {
  check_depth(depth);
  if (targets.empty()) throw InvalidArgument("no targets");
  if (reps < kMinIntersectionReps) throw InvalidArgument("intersection estimates need at least 1000 reps");
  const std::int64_t n = std::int64_t{1} << depth;
  const Box2 square{0, 0, n - 1, n - 1};
  const std::size_t m = targets.size();
  if (m > 64) throw InvalidArgument("at most 64 targets per run");

  // One bitmap per square cell: bit t set when the cell is in target t.
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(n * n), 0);
  for (std::size_t t = 0; t < m; ++t) {
    const Box2 b = targets[t].bounds();
    if (b.x0 < 0 || b.y0 < 0 || b.x1 >= n || b.y1 >= n) {
      throw InvalidArgument("target " + targets[t].to_string() + " leaves the square");
    }
    for (std::int64_t x = b.x0; x <= b.x1; ++x) {
      for (std::int64_t y = b.y0; y <= b.y1; ++y) {
        if (targets[t].contains({x, y})) mask[static_cast<std::size_t>(y * n + x)] |= std::uint64_t{1} << t;
      }
    }
  }
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  auto cell_mask = [&](std::int64_t x, std::int64_t y) -> std::uint64_t {
    return square.contains({x, y}) ? mask[static_cast<std::size_t>(y * n + x)] : 0;
  };

  const auto fractal_hits = replicate(reps, mix_seed(master_seed, 1), threads, [&](RngStream& rng, std::uint64_t) {
    const PercolationTree tree = sample_fractal(depth, rng);
    std::uint64_t hit = 0;
    for (const Cell& c : tree.leaves()) hit |= cell_mask(c.x, c.y);
    return hit;
  });
  const std::uint64_t steps = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  const auto walk_hits = replicate(reps, mix_seed(master_seed, 2), threads, [&](RngStream& rng, std::uint64_t) {
    std::int64_t x = n / 2, y = n / 2;
    std::uint64_t hit = cell_mask(x, y);
    for (std::uint64_t t = 0; t < steps && hit != all; ++t) {
      switch (draw_direction(2, rng)) {
        case 0: ++x; break;
        case 1: --x; break;
        case 2: ++y; break;
        default: --y; break;
      }
      hit |= cell_mask(x, y);
    }
    return hit;
  });

  std::vector<IntersectionEstimate> out;
  for (std::size_t t = 0; t < m; ++t) {
    const std::uint64_t bit = std::uint64_t{1} << t;
    std::uint64_t q = 0, r = 0;
    for (auto h : fractal_hits) q += (h & bit) ? 1 : 0;
    for (auto h : walk_hits) r += (h & bit) ? 1 : 0;
    IntersectionEstimate e = estimate_from_counts(targets[t], depth, reps, master_seed, q, r);
    out.push_back(e);
  }
  return out;
}

IntersectionEstimate intersection_ratio(const TargetSet& target, int depth, std::uint64_t reps,
                                        std::uint64_t master_seed, unsigned threads) {
  return intersection_ratios(std::span(&target, 1), depth, reps, master_seed, threads).front();
}

}  // namespace rwrange
