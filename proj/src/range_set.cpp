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


#include "rwrange/range_set.hpp"

#include <algorithm>

namespace rwrange {

RangeSet::RangeSet(int dim) : dim_(dim), lo_(dim), hi_(dim) {}

RangeSet::RangeSet(int dim, std::initializer_list<LatticePoint> points) : RangeSet(dim) {
  for (const auto& p : points) insert(p);
}

bool RangeSet::insert(const LatticePoint& p) {
  if (p.dim() != dim_) throw InvalidArgument("point dimension does not match range dimension");
  const bool first = points_.empty();
  if (!points_.insert(p).second) return false;
  if (first) {
    lo_ = p;
    hi_ = p;
  } else {
    for (int i = 0; i < dim_; ++i) {
      lo_[i] = std::min(lo_[i], p[i]);
      hi_[i] = std::max(hi_[i], p[i]);
    }
  }
  return true;
}

std::vector<LatticePoint> RangeSet::sorted_points() const {
  std::vector<LatticePoint> v(points_.begin(), points_.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::string RangeSet::canonical_key() const {
  std::string key;
  auto put32 = [&key](std::uint32_t x) {
    for (int s = 24; s >= 0; s -= 8) key.push_back(static_cast<char>((x >> s) & 0xFF));
  };
  put32(static_cast<std::uint32_t>(dim_));
  put32(static_cast<std::uint32_t>(points_.size()));
  for (const auto& p : sorted_points()) {
    for (int i = 0; i < dim_; ++i) put32(static_cast<std::uint32_t>(p[i]));
  }
  return key;
}

RangeSet range_of(const Trajectory& traj) {
  RangeSet r(traj.dim());
  LatticePoint p = LatticePoint::origin(traj.dim());
  r.insert(p);
  for (auto s : traj.steps()) {
    p.step(s);
    r.insert(p);
  }
  return r;
}

RangeSet inner_boundary(const RangeSet& a) {
  RangeSet b(a.dim());
  const int dirs = 2 * a.dim();
  for (const auto& p : a) {
    for (int dir = 0; dir < dirs; ++dir) {
      if (!a.contains(p.moved(dir))) {
        b.insert(p);
        break;
      }
    }
  }
  return b;
}

bool is_connected(const RangeSet& a) {
  if (a.empty()) return true;
  std::unordered_set<LatticePoint, LatticePointHash> seen;
  std::vector<LatticePoint> stack{*a.begin()};
  seen.insert(*a.begin());
  const int dirs = 2 * a.dim();
  while (!stack.empty()) {
    const LatticePoint p = stack.back();
    stack.pop_back();
    for (int dir = 0; dir < dirs; ++dir) {
      LatticePoint q = p.moved(dir);
      if (a.contains(q) && seen.insert(q).second) stack.push_back(q);
    }
  }
  return seen.size() == a.size();
}

}  // namespace rwrange
