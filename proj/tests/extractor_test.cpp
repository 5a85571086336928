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

#include <algorithm>
#include <set>

#include "rwrange/extractor.hpp"

namespace rwrange {
namespace {

// Places the occupied cells of one window at `anchor`.
void embed(RangeSet& r, const TemplatePair& tp, Cell anchor, bool right) {
  for (int i = 0; i < tp.width(); ++i) {
    for (int j = 0; j < tp.height(); ++j) {
      const CellState s = right ? tp.right(i, j) : tp.left(i, j);
      if (s == CellState::kOccupied) r.insert(to_point({anchor.x + i, anchor.y + j}));
    }
  }
}

RangeSet walk_range(std::uint64_t n, std::uint64_t seed, std::uint64_t stream) {
  auto rng = derive_stream(seed, stream);
  return range_of(simulate_walk(2, n, rng));
}

// Oracle: direct window tests against std::set, then greedy selection with
// an explicit list of accepted windows.
std::vector<Occurrence> naive_scan(const RangeSet& r, const TemplatePair& tp) {
  std::set<Cell> cells;
  for (const auto& p : r) cells.insert(to_cell(p));
  const Box2 b = bounding_box(r);
  auto fits = [&](Cell a, bool right) {
    for (int i = 0; i < tp.width(); ++i) {
      for (int j = 0; j < tp.height(); ++j) {
        const CellState s = right ? tp.right(i, j) : tp.left(i, j);
        if (s == CellState::kIgnore) continue;
        if ((s == CellState::kOccupied) != cells.contains({a.x + i, a.y + j})) return false;
      }
    }
    return true;
  };
  std::vector<Occurrence> out;
  for (std::int64_t x = b.x0 - tp.width() + 1; x <= b.x1; ++x) {
    for (std::int64_t y = b.y0 - tp.height() + 1; y <= b.y1; ++y) {
      const bool l = fits({x, y}, false);
      const bool rt = !l && fits({x, y}, true);
      if (!l && !rt) continue;
      const bool overlaps = std::any_of(out.begin(), out.end(), [&](const Occurrence& o) {
        return std::abs(o.anchor.x - x) < tp.width() && std::abs(o.anchor.y - y) < tp.height();
      });
      if (!overlaps) out.push_back({{x, y}, rt});
    }
  }
  return out;
}

TEST(Templates, DefaultPairIsReflectionSymmetric) {
  for (const TemplatePair& tp : {default_templates(), triomino_templates()}) {
    bool differs = false;
    for (int i = 0; i < tp.width(); ++i) {
      for (int j = 0; j < tp.height(); ++j) {
        const auto [ri, rj] = tp.reflect(i, j);
        EXPECT_EQ(tp.left(i, j), tp.right(ri, rj));
        if (tp.is_context(i, j)) EXPECT_EQ(tp.left(ri, rj), tp.left(i, j));
        differs |= tp.left(i, j) != tp.right(i, j);
      }
    }
    EXPECT_TRUE(differs);
  }
}

TEST(Templates, PatternCellsAreInteriorInDefault) {
  const TemplatePair tp = default_templates();
  for (int i = 0; i < tp.width(); ++i) {
    for (int j = 0; j < tp.height(); ++j) {
      if (tp.is_context(i, j)) continue;
      EXPECT_GT(i, 0);
      EXPECT_LT(i, tp.width() - 1);
      EXPECT_GT(j, 0);
      EXPECT_LT(j, tp.height() - 1);
    }
  }
}

TEST(Templates, RejectsInvalidPairs) {
  EXPECT_THROW(TemplatePair({"XX.", ".X."}, {"XX.", ".X."}), InvalidArgument);   // identical
  EXPECT_THROW(TemplatePair({"XX.", ".X."}, {".XX", "X.."}), InvalidArgument);   // not mirrored
  EXPECT_THROW(TemplatePair({"...", "..."}, {"...", "..."}), InvalidArgument);   // nothing occupied
  EXPECT_THROW(TemplatePair({"XX.", ".X"}, {".XX", ".X."}), InvalidArgument);    // ragged
  EXPECT_THROW(TemplatePair({"XZ.", ".X."}, {".ZX", ".X."}), InvalidArgument);   // bad char
  EXPECT_THROW(TemplatePair({"X..", "..."}, {"..X", "..."}, Symmetry::kTranspose), InvalidArgument);
  EXPECT_NO_THROW(TemplatePair({"X.", ".."}, {"..", "X."}, Symmetry::kMirrorY));
}

TEST(Templates, TextRoundTrip) {
  for (const TemplatePair& tp : {default_templates(), triomino_templates()}) {
    const TemplatePair back = TemplatePair::parse("# comment\n" + tp.to_text());
    EXPECT_EQ(back.left_rows(), tp.left_rows());
    EXPECT_EQ(back.right_rows(), tp.right_rows());
    EXPECT_EQ(back.symmetry(), tp.symmetry());
  }
  const TemplatePair parsed = TemplatePair::parse("XX.\n.X.\n\n\n.XX\n.X.\n");
  EXPECT_EQ(parsed.symmetry(), Symmetry::kMirrorX);
  EXPECT_EQ(parsed.height(), 2);
  EXPECT_THROW(TemplatePair::parse("XX.\n.X.\n"), InvalidArgument);
  EXPECT_THROW(TemplatePair::parse("symmetry spin\nX.\n\n.X\n"), InvalidArgument);
}

TEST(Scan, SingletonHasNoOccurrences) {
  RangeSet r(2, {LatticePoint{0, 0}});
  EXPECT_TRUE(scan_occurrences(r, default_templates()).empty());
  EXPECT_TRUE(scan_occurrences(r, triomino_templates()).empty());
  EXPECT_TRUE(extract_bits(r, default_templates()).bits.empty());
}

TEST(Scan, SingleEmbeddedLeft) {
  for (const TemplatePair& tp : {default_templates(), triomino_templates()}) {
    RangeSet r(2);
    embed(r, tp, {10, -4}, false);
    const auto occ = scan_occurrences(r, tp);
    ASSERT_EQ(occ.size(), 1u);
    EXPECT_EQ(occ[0].anchor, (Cell{10, -4}));
    EXPECT_FALSE(occ[0].right);
  }
}

TEST(Scan, SingleEmbeddedRightGivesOne) {
  for (const TemplatePair& tp : {default_templates(), triomino_templates()}) {
    RangeSet r(2);
    embed(r, tp, {-3, 7}, true);
    const auto res = extract_bits(r, tp);
    EXPECT_EQ(res.bits, std::vector<std::uint8_t>{1});
    EXPECT_EQ(res.anchors, (std::vector<Cell>{Cell{-3, 7}}));
  }
}

TEST(Scan, MatchesNaiveOracleOnWalks) {
  for (const TemplatePair& tp : {default_templates(), triomino_templates()}) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const RangeSet r = walk_range(3000, 77, s);
      EXPECT_EQ(scan_occurrences(r, tp), naive_scan(r, tp)) << s;
    }
  }
}

TEST(Scan, ThreadCountDoesNotMatter) {
  const TemplatePair tp = triomino_templates();
  for (std::uint64_t s = 0; s < 10; ++s) {
    const RangeSet r = walk_range(20000, 5, s);
    const auto one = scan_occurrences(r, tp, 1);
    EXPECT_EQ(one, scan_occurrences(r, tp, 4));
    EXPECT_EQ(one, scan_occurrences(r, tp, 1));
  }
}

TEST(Scan, WindowsAreDisjoint) {
  const TemplatePair tp = triomino_templates();
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto occ = scan_occurrences(walk_range(20000, 9, s), tp);
    for (std::size_t i = 0; i < occ.size(); ++i) {
      for (std::size_t j = i + 1; j < occ.size(); ++j) {
        const bool overlap = std::abs(occ[i].anchor.x - occ[j].anchor.x) < tp.width() &&
                             std::abs(occ[i].anchor.y - occ[j].anchor.y) < tp.height();
        EXPECT_FALSE(overlap);
      }
    }
  }
}

TEST(Scan, RejectsNonPlanarRange) {
  RangeSet r(3, {LatticePoint{0, 0, 0}});
  EXPECT_THROW(scan_occurrences(r, default_templates()), InvalidArgument);
}

// Flips y (default pair) or x (triomino pair) and checks that every bit is
// complemented at the mirrored anchor, and kept when the pair is swapped.
TEST(Scan, ReflectionComplementsBits) {
  for (const TemplatePair& tp : {default_templates(), triomino_templates()}) {
    const bool flip_y = tp.symmetry() == Symmetry::kMirrorY;
    RangeSet r(2);
    std::vector<std::pair<Cell, bool>> placed = {{{0, 0}, false}, {{9, 2}, true}, {{-8, 12}, true}, {{20, -9}, false}};
    for (auto [a, right] : placed) embed(r, tp, a, right);
    RangeSet mirrored(2);
    for (const auto& p : r) mirrored.insert(flip_y ? LatticePoint{p[0], -p[1]} : LatticePoint{-p[0], p[1]});
    auto mirror_anchor = [&](Cell a) {
      return flip_y ? Cell{a.x, -a.y - tp.height() + 1} : Cell{-a.x - tp.width() + 1, a.y};
    };

    const auto original = scan_occurrences(r, tp);
    ASSERT_EQ(original.size(), placed.size());
    std::set<std::pair<Cell, bool>> expect_complement, expect_same;
    for (const auto& o : original) {
      expect_complement.insert({mirror_anchor(o.anchor), !o.right});
      expect_same.insert({mirror_anchor(o.anchor), o.right});
    }
    std::set<std::pair<Cell, bool>> got, got_swapped;
    for (const auto& o : scan_occurrences(mirrored, tp)) got.insert({o.anchor, o.right});
    for (const auto& o : scan_occurrences(mirrored, tp.swapped())) got_swapped.insert({o.anchor, o.right});
    EXPECT_EQ(got, expect_complement);
    EXPECT_EQ(got_swapped, expect_same);
  }
}

TEST(Extract, Deterministic) {
  const RangeSet r = walk_range(1 << 14, 3, 0);
  EXPECT_EQ(extract_bits(r, default_templates()).bits, extract_bits(r, default_templates()).bits);
}

TEST(Extract, HexPacking) {
  EXPECT_EQ(bits_to_hex({}), "");
  EXPECT_EQ(bits_to_hex({1, 0, 1, 0}), "a");
  EXPECT_EQ(bits_to_hex({1, 1, 1, 1, 0, 0, 0, 1}), "f1");
  EXPECT_EQ(bits_to_hex({1}), "8");
}

}  // namespace
}  // namespace rwrange
