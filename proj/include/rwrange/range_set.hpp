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


// Ranges of walks and their inner boundaries.

#ifndef RWRANGE_RANGE_SET_HPP
#define RWRANGE_RANGE_SET_HPP

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "rwrange/lattice.hpp"

namespace rwrange {

/// A finite set of lattice points with O(1) expected membership and a
/// bounding box that is kept exact under insertion.
class RangeSet {
 public:
  explicit RangeSet(int dim);
  RangeSet(int dim, std::initializer_list<LatticePoint> points);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const LatticePoint& p) const { return points_.contains(p); }

  /// Returns true when `p` was not already present.
  bool insert(const LatticePoint& p);

  /// Componentwise minimum and maximum. Only meaningful when non-empty.
  const LatticePoint& bbox_min() const noexcept { return lo_; }
  const LatticePoint& bbox_max() const noexcept { return hi_; }

  /// Points in lexicographic order.
  std::vector<LatticePoint> sorted_points() const;

  /// Canonical serialization: dimension, size, then the sorted points.
  std::string canonical_key() const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const RangeSet& a, const RangeSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  int dim_;
  std::unordered_set<LatticePoint, LatticePointHash> points_;
  LatticePoint lo_;
  LatticePoint hi_;
};

/// R(n) = {S(0), ..., S(n)}.
RangeSet range_of(const Trajectory& traj);

/// Points of `a` with at least one lattice neighbor outside `a`.
RangeSet inner_boundary(const RangeSet& a);

/// True when `a` is connected under nearest-neighbor adjacency.
bool is_connected(const RangeSet& a);

}  // namespace rwrange

#endif  // RWRANGE_RANGE_SET_HPP
