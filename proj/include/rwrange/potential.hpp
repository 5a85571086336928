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


// Potential kernel of the planar walk and Monte Carlo checks of hitting and
// exit estimates.

#ifndef RWRANGE_POTENTIAL_HPP
#define RWRANGE_POTENTIAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rwrange/lattice.hpp"
#include "rwrange/planar.hpp"

namespace rwrange {

/// Numerical potential kernel a(z) on Z^2: a(0) = 0, discrete harmonic on
/// Z^2 \ {0}, normalized so that a(z) = (2/pi) ln|z| + kappa + O(|z|^-2)
/// with kappa = (2 gamma + ln 8) / pi. In base-2 logarithms the leading
/// coefficient is (2 ln 2 / pi) log2|z|.
///
/// The harmonic system is solved by red-black SOR on the disk
/// |z| < solve_radius, with the asymptotic form imposed on the lattice
/// points just outside the disk.
class PotentialKernel {
 public:
  static constexpr int kDefaultSolveRadius = 128;

  explicit PotentialKernel(int solve_radius = kDefaultSolveRadius, double tolerance = 1e-11);

  /// Throws InvalidArgument unless |z| < solve_radius / 2.
  double operator()(const Cell& z) const;

  int solve_radius() const noexcept { return radius_; }
  int iterations() const noexcept { return iterations_; }
  /// max over solved z != 0 of |a(z) - mean of neighbours|.
  double max_harmonic_residual() const;

  /// (2/pi) ln r + kappa.
  static double asymptotic(double r);
  static double kappa();

 private:
  double at(std::int64_t x, std::int64_t y) const {
    return values_[static_cast<std::size_t>((x + half_) * side_ + (y + half_))];
  }
  bool is_unknown(std::int64_t x, std::int64_t y) const;

  int radius_;
  std::int64_t half_;
  std::int64_t side_;
  std::vector<double> values_;
  int iterations_ = 0;
};

/// One-shot a(z); prefer PotentialKernel when evaluating many points.
double potential_kernel(const Cell& z, int solve_radius = PotentialKernel::kDefaultSolveRadius);

/// Exact (up to rounding and truncation) probability that a walk started at
/// the origin visits `target` within n steps, by evolving the mass
/// distribution on [-domain_half, domain_half]^2 with `target` absorbing.
struct HittingProbability {
  double probability = 0.0;
  double truncation_bound = 0.0;  // mass that left the domain
};
HittingProbability box_hitting_probability(const Box2& target, std::uint64_t n, std::int64_t domain_half);

enum class LemmaId {
  kFromMToK,          // Pr_z[T_0 <= tau_r] >= c log(r/|z|) / log r
  kHitRBeforeR,       // Pr_z[T_r <= tau_R] <= C log(R/|z|) / log(R/r)
  kFromZToAlphaZ,     // Pr_z[T_{alpha|z|} >= n] <= C / log(n / |z|^4)
  kSqrtNToR,          // Pr_z[T_r <= n] <= C / log(n / r^2)
  kRHitsQ,            // Pr[R(n) meets Q(z,k)] <= C / log n * exp(-c |z|^2 / n)
  kRHitsNearQ,        // Pr[R(n) meets Q(z,k)] <= C log(10 sqrt(n) / |z|) / log n
  kBoundaryInSquare,  // Pr_z[dR(n) meets Q(0,k)] <= C log^2 k / log n
};

inline constexpr LemmaId kAllLemmas[] = {
    LemmaId::kFromMToK,    LemmaId::kHitRBeforeR, LemmaId::kFromZToAlphaZ,    LemmaId::kSqrtNToR,
    LemmaId::kRHitsQ,      LemmaId::kRHitsNearQ,  LemmaId::kBoundaryInSquare,
};

const char* to_string(LemmaId id);
LemmaId parse_lemma_id(const std::string& name);
/// True for the one lower-bound estimate (kFromMToK).
bool is_lower_bound(LemmaId id);

/// Parameters of one grid point; each lemma reads the fields it needs.
/// Radii are exact squared rationals.
struct LemmaGridPoint {
  Cell z;
  SquaredRadius small_r2;  // r
  SquaredRadius large_r2;  // R
  std::uint64_t n = 0;
  std::int64_t k = 0;
  double alpha = 0.0;
};

struct LemmaPointResult {
  LemmaGridPoint params;
  std::string label;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double form = 0.0;   // claimed functional form without its constant
  double ratio = 0.0;  // estimate / form
  bool exact = false;  // computed by mass evolution rather than sampling
  bool skipped = false;
  std::string skip_reason;
};

struct LemmaCheckReport {
  LemmaId lemma = LemmaId::kFromMToK;
  std::uint64_t master_seed = 0;
  std::vector<LemmaPointResult> points;
  double fitted_constant = 0.0;  // min ratio (lower bound) or max ratio (upper bound)
  double fitted_exponent = 0.0;  // kRHitsQ only: c in exp(-c |z|^2 / n)
  double band = 0.0;             // max/min ratio over evaluated points
  bool direction_holds = false;
  bool stable = false;

  bool passed() const { return direction_holds && stable; }
};

/// Maximum band (max/min of estimate/form) accepted as a stable constant.
inline constexpr double kLemmaBandLimit = 4.0;

std::vector<LemmaGridPoint> default_lemma_grid(LemmaId id);

/// Estimates the left-hand probability at every grid point (Monte Carlo,
/// except kRHitsQ whose probabilities are far below sampling resolution and
/// are computed by mass evolution), then fits and checks the constant.
/// Grid points violating the lemma's hypotheses are skipped and flagged.
LemmaCheckReport lemma_check(LemmaId id, std::span<const LemmaGridPoint> grid, std::uint64_t reps,
                             std::uint64_t master_seed, unsigned threads = 0);

/// Optional-stopping identity for a(S(t)) started at z and stopped at
/// min(T_0, tau_r): E_z[a(S(T'))] = a(z).
struct OptionalStoppingCheck {
  double kernel_at_start = 0.0;
  double mean_stopped_value = 0.0;
  double std_error = 0.0;
  double hit_probability = 0.0;    // Pr_z[T_0 <= tau_r], sampled
  double hit_std_error = 0.0;
  double predicted_hit_probability = 0.0;  // 1 - a(z) / E[a(S(tau_r)) | tau_r < T_0]
};
OptionalStoppingCheck optional_stopping_check(const PotentialKernel& kernel, const Cell& z, std::int64_t r,
                                              std::uint64_t reps, std::uint64_t master_seed);

}  // namespace rwrange

#endif  // RWRANGE_POTENTIAL_HPP
