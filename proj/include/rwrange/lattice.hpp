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

// Simple symmetric random walk on Z^d.
//
// Direction codes are canonical: code 2i moves by +e_i, code 2i+1 by -e_i.

#ifndef RWRANGE_LATTICE_HPP
#define RWRANGE_LATTICE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rwrange/rng.hpp"

namespace rwrange {

inline constexpr int kMaxDim = 8;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of Z^d, 1 <= d <= kMaxDim, stored inline.
class LatticePoint {
 public:
  using Coord = std::int32_t;

  LatticePoint() = default;
  explicit LatticePoint(int dim);
  LatticePoint(std::initializer_list<Coord> coords);
  explicit LatticePoint(std::span<const Coord> coords);

  static LatticePoint origin(int dim) { return LatticePoint(dim); }

  int dim() const noexcept { return dim_; }
  Coord operator[](int i) const noexcept { return coords_[static_cast<std::size_t>(i)]; }
  Coord& operator[](int i) noexcept { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const Coord> coords() const noexcept {
    return {coords_.data(), static_cast<std::size_t>(dim_)};
  }

  /// Squared Euclidean norm, exact.
  std::int64_t norm2() const noexcept;
  bool is_origin() const noexcept;

  /// Applies direction code `dir` in place.
  void step(int dir) noexcept {
    coords_[static_cast<std::size_t>(dir >> 1)] += (dir & 1) ? -1 : 1;
  }
  LatticePoint moved(int dir) const noexcept {
    LatticePoint p = *this;
    p.step(dir);
    return p;
  }

  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) noexcept {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates (dimension first).
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const;

 private:
  std::array<Coord, kMaxDim> coords_{};
  int dim_ = 0;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
      h = mix64(h + static_cast<std::uint64_t>(static_cast<std::uint32_t>(p[i])) + RngStream::kGamma);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Graph distance on Z^d.
std::int64_t l1_distance(const LatticePoint& a, const LatticePoint& b);

/// An origin-anchored nearest-neighbor path: S(0) = 0 and each step is one
/// direction code.
class Trajectory {
 public:
  explicit Trajectory(int dim);
  Trajectory(int dim, std::vector<std::uint8_t> steps);

  int dim() const noexcept { return dim_; }
  std::size_t length() const noexcept { return steps_.size(); }
  const std::vector<std::uint8_t>& steps() const noexcept { return steps_; }

  void push_step(int dir);

  /// S(0), ..., S(n).
  std::vector<LatticePoint> points() const;
  LatticePoint endpoint() const;

 private:
  int dim_;
  std::vector<std::uint8_t> steps_;
};

/// Draws one uniform direction code in {0, ..., 2d-1}.
inline int draw_direction(int dim, RngStream& rng) noexcept {
  return static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(2 * dim)));
}

Trajectory simulate_walk(int dim, std::uint64_t n, RngStream& rng);

/// A squared radius kept as a nonnegative rational num/den, so ball tests
/// are exact integer comparisons.
struct SquaredRadius {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static SquaredRadius of_integer(std::int64_t r) { return {r * r, 1}; }
  /// Radius p/q.
  static SquaredRadius of_rational(std::int64_t p, std::int64_t q) { return {p * p, q * q}; }
  /// Radius sqrt(r2), e.g. the norm of a lattice vector.
  static SquaredRadius of_squared(std::int64_t r2) { return {r2, 1}; }

  double radius() const;
  // ||v||^2 <= r^2  and  ||v||^2 >= r^2
  bool contains(std::int64_t norm2) const noexcept { return norm2 * den <= num; }
  bool reached(std::int64_t norm2) const noexcept { return norm2 * den >= num; }
};

struct StopSpec {
  enum class Kind { kHitBall, kExitBall, kHitPoint };
  Kind kind = Kind::kHitPoint;
  LatticePoint center;
  SquaredRadius radius2;

  static StopSpec hit_ball(LatticePoint z, SquaredRadius r2) {
    return {Kind::kHitBall, std::move(z), r2};
  }
  static StopSpec exit_ball(LatticePoint z, SquaredRadius r2) {
    return {Kind::kExitBall, std::move(z), r2};
  }
  static StopSpec hit_point(LatticePoint z) { return {Kind::kHitPoint, std::move(z), {}}; }

  bool fires(const LatticePoint& p) const noexcept;
};

struct StoppingOutcome {
  enum class Kind { kHit, kExit, kTimecap };
  Kind kind = Kind::kTimecap;
  std::uint64_t time = 0;
  LatticePoint terminal_point;
};

/// Walks from `start` (the origin when omitted) until `stop` fires or
/// `cap` steps have elapsed. The condition is tested at t = 0 first.
StoppingOutcome run_until(int dim, RngStream& rng, const StopSpec& stop, std::uint64_t cap);
StoppingOutcome run_until_from(const LatticePoint& start, RngStream& rng, const StopSpec& stop,
                               std::uint64_t cap);

/// Stops at the first of several conditions. `which` is the index of the
/// condition that fired; on ties the lowest index wins.
struct RaceOutcome {
  StoppingOutcome outcome;
  std::size_t which = 0;
};
RaceOutcome run_until_first(const LatticePoint& start, RngStream& rng, std::span<const StopSpec> stops,
                            std::uint64_t cap);

struct ProportionEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t reps = 0;
};

/// Monte Carlo estimate of Pr[max_{1<=j<=n} ||S(j)|| >= lambda]. Replica i
/// runs on derive_stream(master_seed, i).
ProportionEstimate tail_displacement_probability(int dim, std::uint64_t n, double lambda,
                                                 std::uint64_t reps, std::uint64_t master_seed);

}  // namespace rwrange

#endif  // RWRANGE_LATTICE_HPP
