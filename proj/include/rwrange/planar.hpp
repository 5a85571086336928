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


// Planar lattice geometry: cells, box tilings at scale k, the triadic scale
// schedule, tile indicators, and complement components.
//
// A box of scale k is the (2k+1) x (2k+1) square Q(z,k) around a center z.
// Scale-k boxes centered on the lattice (2k+1) Z^2 tile the plane.

#ifndef RWRANGE_PLANAR_HPP
#define RWRANGE_PLANAR_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rwrange/range_set.hpp"

namespace rwrange {

/// A site of Z^2. Ordered lexicographically by x, then y.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    return static_cast<std::size_t>(
        mix64(static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(c.y)));
  }
};

Cell to_cell(const LatticePoint& p);
LatticePoint to_point(const Cell& c);

/// Inclusive axis-aligned rectangle [x0,x1] x [y0,y1].
struct Box2 {
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;
  std::int64_t x1 = -1;
  std::int64_t y1 = -1;

  static Box2 square(std::int64_t half) { return {-half, -half, half, half}; }

  std::int64_t width() const noexcept { return x1 - x0 + 1; }
  std::int64_t height() const noexcept { return y1 - y0 + 1; }
  std::int64_t area() const noexcept { return width() * height(); }
  bool contains(const Cell& c) const noexcept {
    return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
  }
  bool on_frame(const Cell& c) const noexcept {
    return c.x == x0 || c.x == x1 || c.y == y0 || c.y == y1;
  }
  Box2 expanded(std::int64_t margin) const noexcept {
    return {x0 - margin, y0 - margin, x1 + margin, y1 + margin};
  }
};

/// Bounding box of a non-empty planar range.
Box2 bounding_box(const RangeSet& a);

/// k_0 = 0, k_{j+1} = 3 k_j + 1, ending with the first k_j > n.
std::vector<std::int64_t> scale_schedule(std::uint64_t n);

/// Floor division for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Center of the scale-k box containing `c`.
constexpr Cell box_center(const Cell& c, std::int64_t k) noexcept {
  const std::int64_t side = 2 * k + 1;
  return {side * floor_div(c.x + k, side), side * floor_div(c.y + k, side)};
}

/// True when `z` lies on the scale-k center lattice (2k+1) Z^2.
constexpr bool is_box_center(const Cell& z, std::int64_t k) noexcept {
  const std::int64_t side = 2 * k + 1;
  return z.x % side == 0 && z.y % side == 0;
}

/// Q(z,k) as a rectangle.
constexpr Box2 box_of(const Cell& z, std::int64_t k) noexcept {
  return {z.x - k, z.y - k, z.x + k, z.y + k};
}

/// The nine scale-k child boxes of a scale-(3k+1) box centered at `parent`,
/// in row-major order: dy = -1, 0, 1 outer, dx = -1, 0, 1 inner.
std::array<Cell, 9> child_centers(const Cell& parent, std::int64_t child_k);

/// Active boxes of the scale-k tiling: centers z in (2k+1) Z^2 inside the
/// window [-2n, 2n]^2 whose box Q(z,k) meets the boundary set.
struct TileIndicator {
  std::int64_t k = 0;
  std::uint64_t n = 0;
  std::vector<Cell> active;  // sorted lexicographically

  std::size_t count() const noexcept { return active.size(); }
  bool is_active(const Cell& z) const;
};

/// Throws InvalidArgument if a boundary point lies outside [-n, n]^2.
TileIndicator tile_indicator(const RangeSet& boundary, std::int64_t k, std::uint64_t n);

/// One 4-connected component of window \ boundary.
struct Component {
  std::vector<Cell> cells;  // lexicographic order; cells.front() is the minimal cell
  bool infinite = false;    // touches the window frame
};

struct ComponentLabeling {
  Box2 window;
  std::vector<Component> components;  // ordered by minimal cell

  std::size_t finite_count() const;
};

/// 4-connected components of `window` minus `boundary`. Components touching
/// the window frame are flagged infinite.
ComponentLabeling complement_components(const RangeSet& boundary, const Box2& window);

}  // namespace rwrange

#endif  // RWRANGE_PLANAR_HPP
