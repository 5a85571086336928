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


// Entropy of walk ranges: an exact enumeration oracle for small n, the
// boundary-size lower bound, the codec-length upper bound, and the
// scaling experiment that ties them together.

#ifndef RWRANGE_ENTROPY_HPP
#define RWRANGE_ENTROPY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rwrange/lattice.hpp"

namespace rwrange {

enum class EstimateKind { kExact, kLowerBound, kUpperBound };
const char* to_string(EstimateKind kind);

struct EntropyEstimate {
  double value = 0.0;  // bits
  EstimateKind kind = EstimateKind::kExact;
  std::uint64_t n = 0;
  int d = 0;
  std::uint64_t samples = 0;  // replicas, or enumerated trajectories for kExact
  double std_error = 0.0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

/// Thrown when (2d)^n exceeds the enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every distinct range of an n-step walk on Z^d with the number of
/// trajectories producing it. p_n(A) = count / total exactly.
struct RangeDistribution {
  struct Entry {
    std::vector<LatticePoint> points;  // sorted
    std::uint64_t count = 0;
  };
  int d = 0;
  std::uint64_t n = 0;
  std::uint64_t total = 0;  // (2d)^n
  std::vector<Entry> entries;  // ordered by canonical key
};

RangeDistribution enumerate_ranges(int d, std::uint64_t n,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// H(R(n)) in bits by full enumeration of the (2d)^n trajectories.
EntropyEstimate exact_range_entropy(int d, std::uint64_t n,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// -log2(1 - 1/(2d)): bits of entropy guaranteed per boundary point.
double boundary_bits_per_point(int d);

/// -log2(1 - 1/(2d)) * (mean |dR| - 1) with propagated standard error.
EntropyEstimate boundary_lower_bound(int d, std::uint64_t n, std::span<const double> boundary_sizes);

struct CodeLengthSample {
  std::uint64_t n = 0;
  double bits = 0.0;
};

/// Mean payload length of the range codec; rejects samples mixing lengths.
EntropyEstimate codec_upper_bound(std::span<const CodeLengthSample> samples);

/// Per-replica observables of one walk.
struct RangeObservation {
  double boundary_size = 0.0;
  double range_size = 0.0;
  double code_bits = 0.0;  // NaN unless d == 2
};

/// Simulates one walk and measures |dR|, |R| and (for d = 2) the payload
/// length of its encoding.
RangeObservation observe_range(int d, std::uint64_t n, RngStream& rng);

struct ScalingRow {
  int d = 0;
  std::uint64_t n = 0;
  std::uint64_t reps = 0;
  EntropyEstimate lower;
  EntropyEstimate upper;  // value NaN unless d == 2
  double mean_boundary = 0.0;
  double boundary_se = 0.0;
  double mean_range = 0.0;
  double range_se = 0.0;

  /// lower * log2^2(n) / n for d = 2, lower / n otherwise.
  double normalized_lower() const;
  /// upper * log2^2(n) / n (d = 2 only).
  double normalized_upper() const;
};

/// Replicas of grid point n run on derive_stream(mix_seed(master_seed, n), i).
std::vector<ScalingRow> scaling_experiment(int d, std::span<const std::uint64_t> n_grid,
                                           std::uint64_t reps, std::uint64_t master_seed,
                                           unsigned threads = 0);

}  // namespace rwrange

#endif  // RWRANGE_ENTROPY_HPP
