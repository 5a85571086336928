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


// Bit extraction from pairs of mirror-image local configurations.
//
// A template pair is two W x H windows over {occupied, empty, ignore}.
// Cells on which the two windows agree form the context; the remaining
// cells form the pattern. A window occurrence contributes bit 0 when it
// matches the left pattern and bit 1 when it matches the right one.

#ifndef RWRANGE_EXTRACTOR_HPP
#define RWRANGE_EXTRACTOR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rwrange/planar.hpp"
#include "rwrange/range_set.hpp"

namespace rwrange {

enum class CellState : std::uint8_t { kEmpty, kOccupied, kIgnore };

/// The lattice reflection carrying the left window onto the right one.
enum class Symmetry {
  kMirrorX,    // (i, j) -> (W-1-i, j)
  kMirrorY,    // (i, j) -> (i, H-1-j)
  kTranspose,  // (i, j) -> (j, i), square windows only
};

const char* to_string(Symmetry s);

/// Window cells are addressed by (i, j), i the column from the left and j
/// the row from the bottom; the anchor is the lower-left cell.
class TemplatePair {
 public:
  /// Rows are given top to bottom using 'X', '.' and '?'. Throws
  /// InvalidArgument if the pair violates any invariant.
  TemplatePair(std::vector<std::string> left_rows, std::vector<std::string> right_rows,
               Symmetry symmetry = Symmetry::kMirrorX);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  Symmetry symmetry() const noexcept { return symmetry_; }

  CellState left(int i, int j) const { return left_[index(i, j)]; }
  CellState right(int i, int j) const { return right_[index(i, j)]; }
  bool is_context(int i, int j) const { return left(i, j) == right(i, j); }

  /// Image of (i, j) under the symmetry.
  std::pair<int, int> reflect(int i, int j) const;

  /// The same pair with left and right exchanged.
  TemplatePair swapped() const;

  /// Text form: left rows, a blank line, right rows. Lines starting with
  /// '#' are comments; an optional "symmetry <name>" line may precede the
  /// grids.
  static TemplatePair parse(std::string_view text);
  std::string to_text() const;

  std::vector<std::string> left_rows() const { return rows(left_); }
  std::vector<std::string> right_rows() const { return rows(right_); }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j * width_ + i); }
  std::vector<std::string> rows(const std::vector<CellState>& cells) const;

  int width_ = 0;
  int height_ = 0;
  Symmetry symmetry_;
  std::vector<CellState> left_;
  std::vector<CellState> right_;
};

/// 3x5 pair, flipped top to bottom: a dead-end cell hanging below an
/// occupied cell versus one standing above it.
///
///     ?.?    ?.?
///     ...    .X.
///     XX?    XX?
///     .X.    ...
///     ?.?    ?.?
///
/// Every neighbour of the two pattern cells lies inside the window, so
/// moving a walk's back-and-forth steps from one dead end to the other is a
/// bijection that leaves the rest of the range unchanged.
TemplatePair default_templates();

/// 3x3 pair: an L-triomino bending left against its mirror image.
///
///     XX.    .XX
///     .X.    .X.
///     ...    ...
///
/// The bent cells touch the window frame, so occurrences are not isolated
/// from their surroundings and neighbouring bits are weakly correlated.
TemplatePair triomino_templates();

struct Occurrence {
  Cell anchor;
  bool right = false;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Anchors are scanned in lexicographic (x, y) order over every window
/// meeting R's bounding box; a match overlapping an earlier accepted window
/// is skipped. `threads` only splits candidate detection.
std::vector<Occurrence> scan_occurrences(const RangeSet& range, const TemplatePair& tp, unsigned threads = 1);

struct ExtractionResult {
  std::vector<std::uint8_t> bits;
  std::vector<Cell> anchors;
};

ExtractionResult extract_bits(const RangeSet& range, const TemplatePair& tp, unsigned threads = 1);

/// Bits packed MSB-first into lowercase hex; the tail is zero-padded.
std::string bits_to_hex(const std::vector<std::uint8_t>& bits);

}  // namespace rwrange

#endif  // RWRANGE_EXTRACTOR_HPP
