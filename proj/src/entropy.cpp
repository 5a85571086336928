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


#include "rwrange/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "rwrange/range_codec.hpp"
#include "rwrange/range_set.hpp"
#include "rwrange/stats.hpp"

namespace rwrange {
namespace {

using CountMap = std::unordered_map<std::string, std::uint64_t>;

std::uint64_t checked_trajectory_count(int d, std::uint64_t n, std::uint64_t budget) {
  if (d < 1 || d > kMaxDim) throw InvalidArgument("invalid dimension");
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(2 * d)) {
      throw BudgetExceeded("(2d)^n exceeds the enumeration budget of " + std::to_string(budget) +
                           " trajectories for d=" + std::to_string(d) + ", n=" + std::to_string(n));
    }
    total *= static_cast<std::uint64_t>(2 * d);
  }
  return total;
}

// Dense indexing of the cube [-n, n]^d, which contains every n-step walk.
class CubeIndex {
 public:
  CubeIndex(int d, std::uint64_t n) : d_(d), side_(2 * static_cast<std::int64_t>(n) + 1) {
    cells_ = 1;
    for (int i = 0; i < d; ++i) cells_ *= side_;
    key_width_ = cells_ <= 65536 ? 2 : 4;
    stride_.resize(static_cast<std::size_t>(d));
    std::int64_t s = 1;
    for (int i = d - 1; i >= 0; --i) {
      stride_[static_cast<std::size_t>(i)] = s;
      s *= side_;
    }
  }

  std::int64_t cells() const { return cells_; }
  std::int64_t center() const { return cells_ / 2; }
  std::int64_t offset(int dir) const {
    const std::int64_t s = stride_[static_cast<std::size_t>(dir >> 1)];
    return (dir & 1) ? -s : s;
  }

  std::string key(std::vector<std::uint32_t> cells) const {
    std::sort(cells.begin(), cells.end());
    std::string k;
    k.reserve(cells.size() * static_cast<std::size_t>(key_width_));
    for (std::uint32_t c : cells) {
      for (int b = key_width_ - 1; b >= 0; --b) k.push_back(static_cast<char>((c >> (8 * b)) & 0xFF));
    }
    return k;
  }

  std::vector<LatticePoint> points(const std::string& key) const {
    std::vector<LatticePoint> pts;
    const auto half = (side_ - 1) / 2;
    for (std::size_t i = 0; i < key.size(); i += static_cast<std::size_t>(key_width_)) {
      std::int64_t c = 0;
      for (int b = 0; b < key_width_; ++b) c = (c << 8) | static_cast<unsigned char>(key[i + static_cast<std::size_t>(b)]);
      LatticePoint p(d_);
      for (int j = 0; j < d_; ++j) {
        const std::int64_t s = stride_[static_cast<std::size_t>(j)];
        p[j] = static_cast<LatticePoint::Coord>(c / s - half);
        c %= s;
      }
      pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
  }

 private:
  int d_;
  std::int64_t side_;
  std::int64_t cells_ = 0;
  int key_width_ = 2;
  std::vector<std::int64_t> stride_;
};

CubeIndex make_cube(int d, std::uint64_t n) {
  CubeIndex cube(d, n);
  if (cube.cells() > (std::int64_t{1} << 26)) {
    throw BudgetExceeded("enumeration cube [-n,n]^d is too large for d=" + std::to_string(d) +
                         ", n=" + std::to_string(n));
  }
  return cube;
}

struct Enumerator {
  const CubeIndex& cube;
  std::uint64_t n;
  int dirs;
  std::vector<std::uint8_t> visits;
  std::vector<std::uint32_t> distinct;
  CountMap counts;

  void descend(std::int64_t pos, std::uint64_t depth) {
    if (depth == n) {
      ++counts[cube.key(distinct)];
      return;
    }
    for (int dir = 0; dir < dirs; ++dir) {
      const std::int64_t next = pos + cube.offset(dir);
      auto& v = visits[static_cast<std::size_t>(next)];
      if (v++ == 0) distinct.push_back(static_cast<std::uint32_t>(next));
      descend(next, depth + 1);
      if (--v == 0) distinct.pop_back();
    }
  }
};

// Enumeration is split by first step; the merge is a commutative sum so the
// result does not depend on the partition.
CountMap count_ranges(int d, std::uint64_t n, const CubeIndex& cube) {
  const std::int64_t start = cube.center();
  if (n == 0) return {{cube.key({static_cast<std::uint32_t>(start)}), 1}};
  auto parts = replicate(static_cast<std::uint64_t>(2 * d), 0, 0, [&](RngStream&, std::uint64_t first) {
    Enumerator e{cube, n, 2 * d, std::vector<std::uint8_t>(static_cast<std::size_t>(cube.cells()), 0), {}, {}};
    e.visits[static_cast<std::size_t>(start)] = 1;
    e.distinct.push_back(static_cast<std::uint32_t>(start));
    const std::int64_t next = start + cube.offset(static_cast<int>(first));
    auto& v = e.visits[static_cast<std::size_t>(next)];
    if (v++ == 0) e.distinct.push_back(static_cast<std::uint32_t>(next));
    e.descend(next, 1);
    return std::move(e.counts);
  });
  CountMap merged = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (auto& [k, c] : parts[i]) merged[k] += c;
    CountMap().swap(parts[i]);
  }
  return merged;
}

double log2_squared(std::uint64_t n) {
  const double l = std::log2(static_cast<double>(n));
  return l * l;
}

}  // namespace

const char* to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::kExact: return "exact";
    case EstimateKind::kLowerBound: return "lower_bound";
    case EstimateKind::kUpperBound: return "upper_bound";
  }
  return "?";
}

RangeDistribution enumerate_ranges(int d, std::uint64_t n, std::uint64_t budget) {
  const std::uint64_t total = checked_trajectory_count(d, n, budget);
  const CubeIndex cube = make_cube(d, n);
  CountMap counts = count_ranges(d, n, cube);
  RangeDistribution dist{d, n, total, {}};
  dist.entries.reserve(counts.size());
  for (const auto& [key, c] : counts) dist.entries.push_back({cube.points(key), c});
  std::sort(dist.entries.begin(), dist.entries.end(), [](const auto& a, const auto& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    return a.points < b.points;
  });
  return dist;
}

EntropyEstimate exact_range_entropy(int d, std::uint64_t n, std::uint64_t budget) {
  const std::uint64_t total = checked_trajectory_count(d, n, budget);
  const CubeIndex cube = make_cube(d, n);
  const CountMap counts = count_ranges(d, n, cube);
  std::uint64_t mass = 0;
  long double weighted = 0.0L;  // sum of c * log2(c)
  for (const auto& [key, c] : counts) {
    mass += c;
    weighted += static_cast<long double>(c) * std::log2(static_cast<long double>(c));
  }
  if (mass != total) throw std::logic_error("enumeration lost probability mass");
  const long double h = std::log2(static_cast<long double>(total)) - weighted / static_cast<long double>(total);
  EntropyEstimate e;
  e.value = std::max(0.0, static_cast<double>(h));
  e.kind = EstimateKind::kExact;
  e.n = n;
  e.d = d;
  e.samples = total;
  return e;
}

double boundary_bits_per_point(int d) {
  if (d < 1) throw InvalidArgument("invalid dimension");
  return -std::log2(1.0 - 1.0 / (2.0 * d));
}

EntropyEstimate boundary_lower_bound(int d, std::uint64_t n, std::span<const double> boundary_sizes) {
  if (boundary_sizes.size() < 2) throw InvalidArgument("boundary lower bound needs at least two samples");
  const double coef = boundary_bits_per_point(d);
  const Summary s = summarize(boundary_sizes);
  EntropyEstimate e;
  e.value = coef * (s.mean - 1.0);
  e.std_error = coef * s.std_error;
  e.kind = EstimateKind::kLowerBound;
  e.n = n;
  e.d = d;
  e.samples = boundary_sizes.size();
  return e;
}

EntropyEstimate codec_upper_bound(std::span<const CodeLengthSample> samples) {
  if (samples.empty()) throw InvalidArgument("no code length samples");
  std::vector<double> bits;
  bits.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.n != samples.front().n) throw InvalidArgument("code length samples mix different walk lengths");
    bits.push_back(s.bits);
  }
  const Summary s = summarize(bits);
  EntropyEstimate e;
  e.value = s.mean;
  e.std_error = s.std_error;
  e.kind = EstimateKind::kUpperBound;
  e.n = samples.front().n;
  e.d = 2;
  e.samples = samples.size();
  return e;
}

RangeObservation observe_range(int d, std::uint64_t n, RngStream& rng) {
  const RangeSet range = range_of(simulate_walk(d, n, rng));
  RangeObservation o;
  o.range_size = static_cast<double>(range.size());
  o.boundary_size = static_cast<double>(inner_boundary(range).size());
  o.code_bits = d == 2 ? static_cast<double>(encode_range(range, n).total_bits)
                       : std::numeric_limits<double>::quiet_NaN();
  return o;
}

double ScalingRow::normalized_lower() const {
  const double scale = d == 2 ? log2_squared(n) / static_cast<double>(n) : 1.0 / static_cast<double>(n);
  return lower.value * scale;
}

double ScalingRow::normalized_upper() const {
  return upper.value * log2_squared(n) / static_cast<double>(n);
}

std::vector<ScalingRow> scaling_experiment(int d, std::span<const std::uint64_t> n_grid,
                                           std::uint64_t reps, std::uint64_t master_seed,
                                           unsigned threads) {
  if (reps < 30) throw InvalidArgument("scaling experiment needs at least 30 replicas per grid point");
  std::vector<ScalingRow> rows;
  for (std::uint64_t n : n_grid) {
    const auto obs = replicate(reps, mix_seed(master_seed, n), threads,
                               [&](RngStream& rng, std::uint64_t) { return observe_range(d, n, rng); });
    std::vector<double> boundary, range, bits;
    std::vector<CodeLengthSample> codes;
    for (const auto& o : obs) {
      boundary.push_back(o.boundary_size);
      range.push_back(o.range_size);
      if (d == 2) codes.push_back({n, o.code_bits});
    }
    ScalingRow row;
    row.d = d;
    row.n = n;
    row.reps = reps;
    row.lower = boundary_lower_bound(d, n, boundary);
    if (d == 2) {
      row.upper = codec_upper_bound(codes);
    } else {
      row.upper.value = std::numeric_limits<double>::quiet_NaN();
      row.upper.kind = EstimateKind::kUpperBound;
      row.upper.n = n;
      row.upper.d = d;
    }
    const Summary bs = summarize(boundary);
    const Summary rs = summarize(range);
    row.mean_boundary = bs.mean;
    row.boundary_se = bs.std_error;
    row.mean_range = rs.mean;
    row.range_se = rs.std_error;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rwrange
