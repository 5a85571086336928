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


#include "rwrange/planar.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace rwrange {
namespace {

constexpr std::int64_t kMaxWindowArea = std::int64_t{1} << 31;

}  // namespace

Cell to_cell(const LatticePoint& p) {
  if (p.dim() != 2) throw InvalidArgument("planar operation on a non-planar point");
  return {p[0], p[1]};
}

LatticePoint to_point(const Cell& c) {
  return LatticePoint{static_cast<LatticePoint::Coord>(c.x), static_cast<LatticePoint::Coord>(c.y)};
}

Box2 bounding_box(const RangeSet& a) {
  if (a.dim() != 2) throw InvalidArgument("planar operation on a non-planar range");
  if (a.empty()) throw InvalidArgument("bounding box of an empty range");
  return {a.bbox_min()[0], a.bbox_min()[1], a.bbox_max()[0], a.bbox_max()[1]};
}

std::vector<std::int64_t> scale_schedule(std::uint64_t n) {
  std::vector<std::int64_t> ks{0};
  while (static_cast<std::uint64_t>(ks.back()) <= n) ks.push_back(3 * ks.back() + 1);
  return ks;
}

std::array<Cell, 9> child_centers(const Cell& parent, std::int64_t child_k) {
  const std::int64_t side = 2 * child_k + 1;
  std::array<Cell, 9> out;
  std::size_t i = 0;
  for (std::int64_t dy = -1; dy <= 1; ++dy) {
    for (std::int64_t dx = -1; dx <= 1; ++dx) out[i++] = {parent.x + dx * side, parent.y + dy * side};
  }
  return out;
}

bool TileIndicator::is_active(const Cell& z) const {
  return std::binary_search(active.begin(), active.end(), z);
}

TileIndicator tile_indicator(const RangeSet& boundary, std::int64_t k, std::uint64_t n) {
  if (boundary.dim() != 2) throw InvalidArgument("tile indicator needs a planar boundary");
  if (k < 0) throw InvalidArgument("negative scale");
  const auto half = static_cast<std::int64_t>(n);
  const Box2 reach = Box2::square(half);
  const Box2 window = Box2::square(2 * half);
  std::unordered_set<Cell, CellHash> centers;
  for (const auto& p : boundary) {
    const Cell c = to_cell(p);
    if (!reach.contains(c)) {
      throw InvalidArgument("boundary point " + p.to_string() + " is outside [-n,n]^2 for n=" +
                            std::to_string(n));
    }
    const Cell z = box_center(c, k);
    if (window.contains(z)) centers.insert(z);
  }
  TileIndicator t{k, n, {centers.begin(), centers.end()}};
  std::sort(t.active.begin(), t.active.end());
  return t;
}

std::size_t ComponentLabeling::finite_count() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const Component& c) { return !c.infinite; }));
}

ComponentLabeling complement_components(const RangeSet& boundary, const Box2& window) {
  if (boundary.dim() != 2) throw InvalidArgument("components need a planar boundary");
  if (window.width() <= 0 || window.height() <= 0) throw InvalidArgument("empty window");
  if (window.area() > kMaxWindowArea) throw InvalidArgument("window too large for dense labeling");

  const std::int64_t h = window.height();
  // Linear index (x - x0) * h + (y - y0) enumerates cells lexicographically.
  auto index = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::size_t>((x - window.x0) * h + (y - window.y0));
  };
  constexpr std::uint8_t kFree = 0, kWall = 1, kDone = 2;
  std::vector<std::uint8_t> state(static_cast<std::size_t>(window.area()), kFree);
  for (const auto& p : boundary) {
    const Cell c = to_cell(p);
    if (window.contains(c)) state[index(c.x, c.y)] = kWall;
  }

  ComponentLabeling out;
  out.window = window;
  std::vector<Cell> stack;
  for (std::int64_t x = window.x0; x <= window.x1; ++x) {
    for (std::int64_t y = window.y0; y <= window.y1; ++y) {
      if (state[index(x, y)] != kFree) continue;
      Component comp;
      state[index(x, y)] = kDone;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        comp.cells.push_back(c);
        if (window.on_frame(c)) comp.infinite = true;
        const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (const Cell& q : nbrs) {
          if (!window.contains(q)) continue;
          auto& s = state[index(q.x, q.y)];
          if (s == kFree) {
            s = kDone;
            stack.push_back(q);
          }
        }
      }
      std::sort(comp.cells.begin(), comp.cells.end());
      out.components.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace rwrange
