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


#include "rwrange/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "rwrange/stats.hpp"

namespace rwrange {
namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw InvalidArgument("invalid dimension " + std::to_string(dim) + " (expected 1.." +
                          std::to_string(kMaxDim) + ")");
  }
}

}  // namespace

LatticePoint::LatticePoint(int dim) : dim_(dim) { check_dim(dim); }

LatticePoint::LatticePoint(std::initializer_list<Coord> coords)
    : LatticePoint(std::span<const Coord>(coords.begin(), coords.size())) {}

LatticePoint::LatticePoint(std::span<const Coord> coords) : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

std::int64_t LatticePoint::norm2() const noexcept {
  std::int64_t s = 0;
  for (int i = 0; i < dim_; ++i) s += static_cast<std::int64_t>((*this)[i]) * (*this)[i];
  return s;
}

bool LatticePoint::is_origin() const noexcept {
  for (int i = 0; i < dim_; ++i) {
    if ((*this)[i] != 0) return false;
  }
  return true;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("dimension mismatch");
  LatticePoint r(a.dim_);
  for (int i = 0; i < a.dim_; ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("dimension mismatch");
  LatticePoint r(a.dim_);
  for (int i = 0; i < a.dim_; ++i) r[i] = a[i] + b[i];
  return r;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string((*this)[i]);
  }
  return s + ")";
}

std::int64_t l1_distance(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < a.dim(); ++i) s += std::llabs(static_cast<std::int64_t>(a[i]) - b[i]);
  return s;
}

Trajectory::Trajectory(int dim) : dim_(dim) { check_dim(dim); }

Trajectory::Trajectory(int dim, std::vector<std::uint8_t> steps) : dim_(dim), steps_(std::move(steps)) {
  check_dim(dim);
  for (auto s : steps_) {
    if (s >= 2 * dim_) throw InvalidArgument("direction code out of range");
  }
}

void Trajectory::push_step(int dir) {
  if (dir < 0 || dir >= 2 * dim_) throw InvalidArgument("direction code out of range");
  steps_.push_back(static_cast<std::uint8_t>(dir));
}

std::vector<LatticePoint> Trajectory::points() const {
  std::vector<LatticePoint> pts;
  pts.reserve(steps_.size() + 1);
  LatticePoint p = LatticePoint::origin(dim_);
  pts.push_back(p);
  for (auto s : steps_) {
    p.step(s);
    pts.push_back(p);
  }
  return pts;
}

LatticePoint Trajectory::endpoint() const {
  LatticePoint p = LatticePoint::origin(dim_);
  for (auto s : steps_) p.step(s);
  return p;
}

Trajectory simulate_walk(int dim, std::uint64_t n, RngStream& rng) {
  check_dim(dim);
  std::vector<std::uint8_t> steps(static_cast<std::size_t>(n));
  for (auto& s : steps) s = static_cast<std::uint8_t>(draw_direction(dim, rng));
  return Trajectory(dim, std::move(steps));
}

double SquaredRadius::radius() const {
  return std::sqrt(static_cast<double>(num) / static_cast<double>(den));
}

bool StopSpec::fires(const LatticePoint& p) const noexcept {
  switch (kind) {
    case Kind::kHitPoint:
      return p == center;
    case Kind::kHitBall:
    case Kind::kExitBall: {
      std::int64_t d2 = 0;
      for (int i = 0; i < p.dim(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(p[i]) - center[i];
        d2 += d * d;
      }
      return kind == Kind::kHitBall ? radius2.contains(d2) : radius2.reached(d2);
    }
  }
  return false;
}

StoppingOutcome run_until_from(const LatticePoint& start, RngStream& rng, const StopSpec& stop,
                               std::uint64_t cap) {
  if (stop.center.dim() != start.dim()) throw InvalidArgument("stop center dimension mismatch");
  const StoppingOutcome::Kind fired_kind = stop.kind == StopSpec::Kind::kExitBall
                                               ? StoppingOutcome::Kind::kExit
                                               : StoppingOutcome::Kind::kHit;
  LatticePoint p = start;
  const int dim = start.dim();
  for (std::uint64_t t = 0;; ++t) {
    if (stop.fires(p)) return {fired_kind, t, p};
    if (t == cap) return {StoppingOutcome::Kind::kTimecap, t, p};
    p.step(draw_direction(dim, rng));
  }
}

RaceOutcome run_until_first(const LatticePoint& start, RngStream& rng, std::span<const StopSpec> stops,
                            std::uint64_t cap) {
  for (const auto& s : stops) {
    if (s.center.dim() != start.dim()) throw InvalidArgument("stop center dimension mismatch");
  }
  LatticePoint p = start;
  const int dim = start.dim();
  for (std::uint64_t t = 0;; ++t) {
    for (std::size_t i = 0; i < stops.size(); ++i) {
      if (stops[i].fires(p)) {
        const auto kind = stops[i].kind == StopSpec::Kind::kExitBall ? StoppingOutcome::Kind::kExit
                                                                     : StoppingOutcome::Kind::kHit;
        return {{kind, t, p}, i};
      }
    }
    if (t == cap) return {{StoppingOutcome::Kind::kTimecap, t, p}, stops.size()};
    p.step(draw_direction(dim, rng));
  }
}

StoppingOutcome run_until(int dim, RngStream& rng, const StopSpec& stop, std::uint64_t cap) {
  return run_until_from(LatticePoint::origin(dim), rng, stop, cap);
}

ProportionEstimate tail_displacement_probability(int dim, std::uint64_t n, double lambda,
                                                 std::uint64_t reps, std::uint64_t master_seed) {
  check_dim(dim);
  if (reps == 0) throw InvalidArgument("reps must be positive");
  const double lambda2 = lambda * lambda;
  auto hits = replicate(reps, master_seed, 0, [&](RngStream& rng, std::uint64_t) -> char {
    if (n == 0) return 0;
    if (lambda <= 0.0) return 1;
    LatticePoint p = LatticePoint::origin(dim);
    for (std::uint64_t j = 1; j <= n; ++j) {
      p.step(draw_direction(dim, rng));
      if (static_cast<double>(p.norm2()) >= lambda2) return 1;
    }
    return 0;
  });
  std::uint64_t k = 0;
  for (char h : hits) k += static_cast<std::uint64_t>(h);
  const Summary s = summarize_proportion(k, reps);
  return {s.mean, s.std_error, k, reps};
}

}  // namespace rwrange
