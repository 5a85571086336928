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


#include "rwrange/extractor.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace rwrange {
namespace {

CellState parse_state(char c) {
  switch (c) {
    case 'X': return CellState::kOccupied;
    case '.': return CellState::kEmpty;
    case '?': return CellState::kIgnore;
    default: throw InvalidArgument(std::string("bad template character '") + c + "'");
  }
}

char state_char(CellState s) {
  switch (s) {
    case CellState::kOccupied: return 'X';
    case CellState::kEmpty: return '.';
    case CellState::kIgnore: return '?';
  }
  return '?';
}

std::vector<CellState> parse_grid(const std::vector<std::string>& rows, int& width) {
  if (rows.empty()) throw InvalidArgument("empty template");
  width = static_cast<int>(rows.front().size());
  if (width == 0) throw InvalidArgument("empty template row");
  const int height = static_cast<int>(rows.size());
  std::vector<CellState> cells(static_cast<std::size_t>(width * height));
  for (int r = 0; r < height; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != width) {
      throw InvalidArgument("ragged template rows");
    }
    const int j = height - 1 - r;
    for (int i = 0; i < width; ++i) {
      cells[static_cast<std::size_t>(j * width + i)] = parse_state(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]);
    }
  }
  return cells;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::kMirrorX: return "mirror_x";
    case Symmetry::kMirrorY: return "mirror_y";
    case Symmetry::kTranspose: return "transpose";
  }
  return "?";
}

TemplatePair::TemplatePair(std::vector<std::string> left_rows, std::vector<std::string> right_rows,
                           Symmetry symmetry)
    : symmetry_(symmetry) {
  int right_width = 0;
  left_ = parse_grid(left_rows, width_);
  right_ = parse_grid(right_rows, right_width);
  height_ = static_cast<int>(left_rows.size());
  if (right_width != width_ || right_rows.size() != left_rows.size()) {
    throw InvalidArgument("left and right windows differ in size");
  }
  if (symmetry_ == Symmetry::kTranspose && width_ != height_) {
    throw InvalidArgument("transpose needs a square window");
  }
  bool left_x = false, right_x = false, differs = false;
  for (int j = 0; j < height_; ++j) {
    for (int i = 0; i < width_; ++i) {
      const auto [ri, rj] = reflect(i, j);
      if (left(i, j) != right(ri, rj)) throw InvalidArgument("right window is not the reflected left window");
      if (is_context(i, j) && (!is_context(ri, rj) || left(ri, rj) != left(i, j))) {
        throw InvalidArgument("reflection does not fix the context");
      }
      left_x |= left(i, j) == CellState::kOccupied;
      right_x |= right(i, j) == CellState::kOccupied;
      differs |= !is_context(i, j);
    }
  }
  if (!left_x || !right_x) throw InvalidArgument("each window needs an occupied cell");
  if (!differs) throw InvalidArgument("left and right windows are identical");
}

std::pair<int, int> TemplatePair::reflect(int i, int j) const {
  switch (symmetry_) {
    case Symmetry::kMirrorX: return {width_ - 1 - i, j};
    case Symmetry::kMirrorY: return {i, height_ - 1 - j};
    case Symmetry::kTranspose: return {j, i};
  }
  return {i, j};
}

std::vector<std::string> TemplatePair::rows(const std::vector<CellState>& cells) const {
  std::vector<std::string> out;
  for (int j = height_ - 1; j >= 0; --j) {
    std::string row;
    for (int i = 0; i < width_; ++i) row += state_char(cells[index(i, j)]);
    out.push_back(row);
  }
  return out;
}

TemplatePair TemplatePair::swapped() const { return TemplatePair(right_rows(), left_rows(), symmetry_); }

TemplatePair TemplatePair::parse(std::string_view text) {
  std::vector<std::vector<std::string>> grids(1);
  Symmetry symmetry = Symmetry::kMirrorX;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (!line.empty() && line[0] == '#') continue;
    if (line.rfind("symmetry", 0) == 0) {
      const std::string name = trim(std::string_view(line).substr(8));
      if (name == "mirror_x") symmetry = Symmetry::kMirrorX;
      else if (name == "mirror_y") symmetry = Symmetry::kMirrorY;
      else if (name == "transpose") symmetry = Symmetry::kTranspose;
      else throw InvalidArgument("unknown symmetry '" + name + "'");
      continue;
    }
    if (line.empty()) {
      if (!grids.back().empty()) grids.emplace_back();
      continue;
    }
    grids.back().push_back(line);
  }
  if (grids.back().empty()) grids.pop_back();
  if (grids.size() != 2) throw InvalidArgument("template text needs exactly two grids");
  return TemplatePair(grids[0], grids[1], symmetry);
}

std::string TemplatePair::to_text() const {
  std::string out = std::string("symmetry ") + to_string(symmetry_) + "\n";
  for (const auto& r : left_rows()) out += r + "\n";
  out += "\n";
  for (const auto& r : right_rows()) out += r + "\n";
  return out;
}

TemplatePair default_templates() {
  return TemplatePair({"?.?", "...", "XX?", ".X.", "?.?"}, {"?.?", ".X.", "XX?", "...", "?.?"}, Symmetry::kMirrorY);
}

TemplatePair triomino_templates() { return TemplatePair({"XX.", ".X.", "..."}, {".XX", ".X.", "..."}); }

std::vector<Occurrence> scan_occurrences(const RangeSet& range, const TemplatePair& tp, unsigned threads) {
  if (range.dim() != 2) throw InvalidArgument("extraction needs a planar range");
  if (range.empty()) return {};
  const std::int64_t w = tp.width(), h = tp.height();
  const Box2 box = bounding_box(range);
  // Dense occupancy over the anchor region plus the window extent.
  const Box2 grid{box.x0 - w + 1, box.y0 - h + 1, box.x1 + w - 1, box.y1 + h - 1};
  const std::int64_t gw = grid.width(), gh = grid.height();
  std::vector<std::uint8_t> occupied(static_cast<std::size_t>(gw * gh), 0);
  auto idx = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::size_t>((x - grid.x0) * gh + (y - grid.y0));
  };
  for (const auto& p : range) occupied[idx(p[0], p[1])] = 1;

  auto matches = [&](std::int64_t ax, std::int64_t ay, bool right) {
    for (int i = 0; i < w; ++i) {
      for (int j = 0; j < h; ++j) {
        const CellState s = right ? tp.right(i, j) : tp.left(i, j);
        if (s == CellState::kIgnore) continue;
        if ((s == CellState::kOccupied) != static_cast<bool>(occupied[idx(ax + i, ay + j)])) return false;
      }
    }
    return true;
  };

  // Candidate detection, split into bands of anchor columns.
  const std::int64_t ax0 = box.x0 - w + 1, ax1 = box.x1;
  const std::int64_t ay0 = box.y0 - h + 1, ay1 = box.y1;
  const std::int64_t columns = ax1 - ax0 + 1;
  const std::int64_t bands = std::clamp<std::int64_t>(threads, 1, columns);
  std::vector<std::vector<Occurrence>> found(static_cast<std::size_t>(bands));
  auto work = [&](std::int64_t b) {
    const std::int64_t lo = ax0 + columns * b / bands, hi = ax0 + columns * (b + 1) / bands;
    auto& out = found[static_cast<std::size_t>(b)];
    for (std::int64_t x = lo; x < hi; ++x) {
      for (std::int64_t y = ay0; y <= ay1; ++y) {
        if (matches(x, y, false)) out.push_back({{x, y}, false});
        else if (matches(x, y, true)) out.push_back({{x, y}, true});
      }
    }
  };
  if (bands == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::int64_t b = 0; b < bands; ++b) pool.emplace_back(work, b);
  }

  // Greedy disjoint selection in anchor order.
  std::vector<std::uint8_t> claimed(occupied.size(), 0);
  std::vector<Occurrence> accepted;
  for (const auto& band : found) {
    for (const Occurrence& o : band) {
      bool free = true;
      for (int i = 0; i < w && free; ++i) {
        for (int j = 0; j < h && free; ++j) free = !claimed[idx(o.anchor.x + i, o.anchor.y + j)];
      }
      if (!free) continue;
      for (int i = 0; i < w; ++i) {
        for (int j = 0; j < h; ++j) claimed[idx(o.anchor.x + i, o.anchor.y + j)] = 1;
      }
      accepted.push_back(o);
    }
  }
  return accepted;
}

ExtractionResult extract_bits(const RangeSet& range, const TemplatePair& tp, unsigned threads) {
  ExtractionResult out;
  for (const Occurrence& o : scan_occurrences(range, tp, threads)) {
    out.bits.push_back(o.right ? 1 : 0);
    out.anchors.push_back(o.anchor);
  }
  return out;
}

std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      nibble = (nibble << 1) | (i + b < bits.size() && bits[i + b] ? 1 : 0);
    }
    out += kDigits[nibble];
  }
  return out;
}

}  // namespace rwrange
