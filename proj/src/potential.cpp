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


#include "rwrange/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rwrange/stats.hpp"

namespace rwrange {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr std::uint64_t kUnboundedCap = std::uint64_t{1} << 40;

double norm(const Cell& z) { return std::hypot(static_cast<double>(z.x), static_cast<double>(z.y)); }
std::int64_t norm2(const Cell& z) { return z.x * z.x + z.y * z.y; }

// ||v||^2 >= r2 as exact rationals: a/b >= c/d.
bool rational_ge(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d >= static_cast<__int128>(c) * b;
}

}  // namespace

// ---------------------------------------------------------------------------
// Potential kernel

double PotentialKernel::kappa() { return (2.0 * kEulerGamma + std::log(8.0)) / std::numbers::pi; }

double PotentialKernel::asymptotic(double r) { return 2.0 / std::numbers::pi * std::log(r) + kappa(); }

bool PotentialKernel::is_unknown(std::int64_t x, std::int64_t y) const {
  const std::int64_t r2 = x * x + y * y;
  return r2 > 0 && r2 < static_cast<std::int64_t>(radius_) * radius_;
}

PotentialKernel::PotentialKernel(int solve_radius, double tolerance)
    : radius_(solve_radius), half_(solve_radius + 1), side_(2 * half_ + 1) {
  if (solve_radius < 4) throw InvalidArgument("solve radius must be at least 4");
  values_.assign(static_cast<std::size_t>(side_ * side_), 0.0);
  auto cell = [this](std::int64_t x, std::int64_t y) -> double& {
    return values_[static_cast<std::size_t>((x + half_) * side_ + (y + half_))];
  };
  for (std::int64_t x = -half_; x <= half_; ++x) {
    for (std::int64_t y = -half_; y <= half_; ++y) {
      if (x == 0 && y == 0) continue;
      cell(x, y) = asymptotic(std::hypot(static_cast<double>(x), static_cast<double>(y)));
    }
  }

  const double omega = 2.0 / (1.0 + std::sin(std::numbers::pi / (2.0 * radius_)));
  for (iterations_ = 1; iterations_ <= 200'000; ++iterations_) {
    double max_change = 0.0;
    for (int colour = 0; colour < 2; ++colour) {
      for (std::int64_t x = -radius_; x <= radius_; ++x) {
        for (std::int64_t y = -radius_; y <= radius_; ++y) {
          if (((x + y) & 1) != colour || !is_unknown(x, y)) continue;
          double& v = cell(x, y);
          const double avg = 0.25 * (cell(x + 1, y) + cell(x - 1, y) + cell(x, y + 1) + cell(x, y - 1));
          const double delta = omega * (avg - v);
          v += delta;
          max_change = std::max(max_change, std::abs(delta));
        }
      }
    }
    if (max_change < tolerance) break;
  }
}

double PotentialKernel::operator()(const Cell& z) const {
  if (4 * norm2(z) >= static_cast<std::int64_t>(radius_) * radius_) {
    throw InvalidArgument("potential kernel requested at |z| >= solve_radius/2");
  }
  return at(z.x, z.y);
}

double PotentialKernel::max_harmonic_residual() const {
  double worst = 0.0;
  for (std::int64_t x = -radius_; x <= radius_; ++x) {
    for (std::int64_t y = -radius_; y <= radius_; ++y) {
      if (!is_unknown(x, y)) continue;
      const double avg = 0.25 * (at(x + 1, y) + at(x - 1, y) + at(x, y + 1) + at(x, y - 1));
      worst = std::max(worst, std::abs(at(x, y) - avg));
    }
  }
  return worst;
}

double potential_kernel(const Cell& z, int solve_radius) { return PotentialKernel(solve_radius)(z); }

// ---------------------------------------------------------------------------
// Mass evolution

HittingProbability box_hitting_probability(const Box2& target, std::uint64_t n, std::int64_t domain_half) {
  if (domain_half < 1) throw InvalidArgument("domain too small");
  HittingProbability out;
  if (target.contains({0, 0})) {
    out.probability = 1.0;
    return out;
  }
  const std::int64_t half = domain_half;
  const std::int64_t side = 2 * half + 3;  // one zero cell of padding on each side
  auto idx = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::size_t>((x + half + 1) * side + (y + half + 1));
  };
  std::vector<double> cur(static_cast<std::size_t>(side * side), 0.0);
  std::vector<double> next(cur.size(), 0.0);
  cur[idx(0, 0)] = 1.0;
  double absorbed = 0.0, lost = 0.0;
  for (std::uint64_t t = 0; t < n; ++t) {
    const std::int64_t reach = std::min<std::int64_t>(static_cast<std::int64_t>(t) + 1, half);
    // Mass on the domain edge that steps outside is dropped.
    const std::int64_t prev = std::min<std::int64_t>(static_cast<std::int64_t>(t), half);
    if (prev == half) {
      for (std::int64_t i = -half; i <= half; ++i) {
        lost += 0.25 * (cur[idx(half, i)] + cur[idx(-half, i)] + cur[idx(i, half)] + cur[idx(i, -half)]);
      }
    }
    for (std::int64_t x = -reach; x <= reach; ++x) {
      double* row = &next[idx(x, 0)];
      const double* left = &cur[idx(x - 1, 0)];
      const double* right = &cur[idx(x + 1, 0)];
      const double* mid = &cur[idx(x, 0)];
      for (std::int64_t y = -reach; y <= reach; ++y) {
        row[y] = 0.25 * (left[y] + right[y] + mid[y - 1] + mid[y + 1]);
      }
    }
    for (std::int64_t x = std::max(target.x0, -reach); x <= std::min(target.x1, reach); ++x) {
      for (std::int64_t y = std::max(target.y0, -reach); y <= std::min(target.y1, reach); ++y) {
        absorbed += next[idx(x, y)];
        next[idx(x, y)] = 0.0;
      }
    }
    std::swap(cur, next);
  }
  out.probability = absorbed;
  out.truncation_bound = lost;
  return out;
}

// ---------------------------------------------------------------------------
// Lemma checks

const char* to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kFromMToK: return "from_m_to_k";
    case LemmaId::kHitRBeforeR: return "hit_r_before_R";
    case LemmaId::kFromZToAlphaZ: return "from_z_to_alpha_z";
    case LemmaId::kSqrtNToR: return "sqrt_n_to_r";
    case LemmaId::kRHitsQ: return "R_hits_Q";
    case LemmaId::kRHitsNearQ: return "R_hits_near_Q";
    case LemmaId::kBoundaryInSquare: return "boundary_in_square";
  }
  return "?";
}

LemmaId parse_lemma_id(const std::string& name) {
  for (LemmaId id : kAllLemmas) {
    if (name == to_string(id)) return id;
  }
  throw InvalidArgument("unknown lemma '" + name + "'");
}

bool is_lower_bound(LemmaId id) { return id == LemmaId::kFromMToK; }

std::vector<LemmaGridPoint> default_lemma_grid(LemmaId id) {
  std::vector<LemmaGridPoint> grid;
  auto point = [] { return LemmaGridPoint{}; };
  switch (id) {
    case LemmaId::kFromMToK:
      for (std::int64_t zx : {1, 2, 4}) {
        for (std::int64_t r : {8, 32, 128}) {
          auto g = point();
          g.z = {zx, 0};
          g.large_r2 = SquaredRadius::of_integer(r);
          grid.push_back(g);
        }
      }
      {
        auto g = point();
        g.z = {1, 0};
        g.large_r2 = SquaredRadius::of_integer(2);
        grid.push_back(g);
      }
      break;
    case LemmaId::kHitRBeforeR:
      for (std::int64_t zx : {8, 16, 32}) {
        for (std::int64_t div : {2, 4}) {
          auto g = point();
          g.z = {zx, 0};
          g.small_r2 = SquaredRadius::of_integer(zx / div);
          g.large_r2 = SquaredRadius::of_integer(4 * zx);
          grid.push_back(g);
        }
      }
      break;
    case LemmaId::kFromZToAlphaZ:
      for (auto [zx, n] : {std::pair<std::int64_t, std::uint64_t>{2, 1u << 8}, {2, 1u << 12}, {2, 1u << 16},
                           {4, 1u << 12}, {4, 1u << 16}}) {
        auto g = point();
        g.z = {zx, 0};
        g.alpha = 0.5;
        g.small_r2 = SquaredRadius::of_rational(zx, 2);
        g.n = n;
        grid.push_back(g);
      }
      break;
    case LemmaId::kSqrtNToR:
      for (std::int64_t root : {16, 32, 64}) {
        for (std::int64_t r : {1, 2, 4}) {
          auto g = point();
          g.n = static_cast<std::uint64_t>(root * root);
          g.z = {root, 0};
          g.small_r2 = SquaredRadius::of_integer(r);
          grid.push_back(g);
        }
      }
      break;
    case LemmaId::kRHitsQ:
      for (std::int64_t root : {16, 24, 32}) {
        for (std::int64_t tenths : {50, 55, 60}) {
          auto g = point();
          g.n = static_cast<std::uint64_t>(root * root);
          g.k = 2;
          g.z = {(tenths * root + 9) / 10, 0};
          grid.push_back(g);
        }
      }
      break;
    case LemmaId::kRHitsNearQ:
      for (std::int64_t root : {32, 64, 128}) {
        for (std::int64_t div : {8, 4, 2}) {
          auto g = point();
          g.n = static_cast<std::uint64_t>(root * root);
          g.k = 2;
          g.z = {root / div, 0};
          grid.push_back(g);
        }
      }
      break;
    case LemmaId::kBoundaryInSquare:
      for (std::int64_t k : {3, 5, 9}) {
        auto g = point();
        g.n = std::uint64_t{1} << 20;
        g.k = k;
        g.z = {k + 1, 0};
        grid.push_back(g);
      }
      break;
  }
  return grid;
}

namespace {

std::string describe(LemmaId id, const LemmaGridPoint& g) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  const std::string z = "z=(" + std::to_string(g.z.x) + "," + std::to_string(g.z.y) + ")";
  switch (id) {
    case LemmaId::kFromMToK: return z + " r=" + num(g.large_r2.radius());
    case LemmaId::kHitRBeforeR: return z + " r=" + num(g.small_r2.radius()) + " R=" + num(g.large_r2.radius());
    case LemmaId::kFromZToAlphaZ: return z + " alpha=" + num(g.alpha) + " n=" + std::to_string(g.n);
    case LemmaId::kSqrtNToR: return z + " r=" + num(g.small_r2.radius()) + " n=" + std::to_string(g.n);
    case LemmaId::kRHitsQ:
    case LemmaId::kRHitsNearQ: return z + " k=" + std::to_string(g.k) + " n=" + std::to_string(g.n);
    case LemmaId::kBoundaryInSquare: return z + " k=" + std::to_string(g.k) + " n=" + std::to_string(g.n);
  }
  return z;
}

// Empty string when the hypotheses hold.
std::string hypothesis_violation(LemmaId id, const LemmaGridPoint& g) {
  const std::int64_t z2 = norm2(g.z);
  const auto n = static_cast<std::int64_t>(g.n);
  switch (id) {
    case LemmaId::kFromMToK:
      if (z2 == 0) return "z must be nonzero";
      if (!rational_ge(g.large_r2.num, g.large_r2.den, 4 * z2, 1)) return "needs r >= 2|z|";
      if (!(g.large_r2.num > g.large_r2.den)) return "needs r > 1";
      return {};
    case LemmaId::kHitRBeforeR:
      if (!rational_ge(g.small_r2.num, g.small_r2.den, 1, 1)) return "needs r >= 1";
      if (!rational_ge(z2, 1, 4 * g.small_r2.num, g.small_r2.den)) return "needs r <= |z|/2";
      if (!rational_ge(g.large_r2.num, g.large_r2.den, 4 * z2, 1)) return "needs |z|/2 <= R/4";
      return {};
    case LemmaId::kFromZToAlphaZ:
      if (!(g.alpha > 0.0 && g.alpha < 1.0)) return "needs 0 < alpha < 1";
      if (std::sqrt(static_cast<double>(z2)) < 1.0 / g.alpha) return "needs |z| >= 1/alpha";
      if (!(n > z2 * z2)) return "needs n > |z|^4";
      if (std::abs(g.small_r2.radius() - g.alpha * norm(g.z)) > 1e-9) return "r must equal alpha|z|";
      return {};
    case LemmaId::kSqrtNToR:
      if (!rational_ge(g.small_r2.num, g.small_r2.den, 1, 1)) return "needs r >= 1";
      if (!rational_ge(n, 1, 4 * g.small_r2.num, g.small_r2.den)) return "needs r <= sqrt(n)/2";
      if (z2 < n) return "needs |z| >= sqrt(n)";
      return {};
    case LemmaId::kRHitsQ:
      if (g.k < 1 || g.k * g.k * g.k * g.k > n) return "needs 1 <= k <= n^(1/4)";
      if (z2 < 25 * n) return "needs |z| >= 5 sqrt(n)";
      return {};
    case LemmaId::kRHitsNearQ:
      if (g.k < 1 || g.k * g.k * g.k * g.k > n) return "needs 1 <= k <= n^(1/4)";
      if (z2 < 1 || z2 >= 25 * n) return "needs 1 <= |z| < 5 sqrt(n)";
      return {};
    case LemmaId::kBoundaryInSquare: {
      if (g.k < 2) return "needs k >= 2 (log k > 0)";
      if (g.n < 2) return "needs n >= 2";
      const bool in_outer = std::max(std::abs(g.z.x), std::abs(g.z.y)) == g.k + 1;
      const bool adjacent = in_outer && (std::abs(g.z.x) <= g.k || std::abs(g.z.y) <= g.k);
      if (!adjacent) return "z must be adjacent to Q(0,k)";
      return {};
    }
  }
  return {};
}

double claimed_form(LemmaId id, const LemmaGridPoint& g) {
  const double z = norm(g.z);
  const double n = static_cast<double>(g.n);
  switch (id) {
    case LemmaId::kFromMToK: {
      const double r = g.large_r2.radius();
      return std::log2(r / z) / std::log2(r);
    }
    case LemmaId::kHitRBeforeR: {
      const double r = g.small_r2.radius(), big = g.large_r2.radius();
      return std::log2(big / z) / std::log2(big / r);
    }
    case LemmaId::kFromZToAlphaZ: return 1.0 / std::log2(n / std::pow(z, 4));
    case LemmaId::kSqrtNToR: return 1.0 / std::log2(n / g.small_r2.radius() / g.small_r2.radius());
    case LemmaId::kRHitsQ: return 1.0 / std::log2(n);  // exponential factor fitted separately
    case LemmaId::kRHitsNearQ: return std::log2(10.0 * std::sqrt(n) / z) / std::log2(n);
    case LemmaId::kBoundaryInSquare: {
      const double lk = std::log2(static_cast<double>(g.k));
      return lk * lk / std::log2(n);
    }
  }
  return 0.0;
}

LatticePoint planar(const Cell& c) { return to_point(c); }

// One Monte Carlo replica; returns whether the event occurred.
bool sample_event(LemmaId id, const LemmaGridPoint& g, RngStream& rng) {
  const LatticePoint origin = LatticePoint::origin(2);
  switch (id) {
    case LemmaId::kFromMToK: {
      const StopSpec stops[] = {StopSpec::hit_point(origin), StopSpec::exit_ball(origin, g.large_r2)};
      return run_until_first(planar(g.z), rng, stops, kUnboundedCap).which == 0;
    }
    case LemmaId::kHitRBeforeR: {
      const StopSpec stops[] = {StopSpec::hit_ball(origin, g.small_r2), StopSpec::exit_ball(origin, g.large_r2)};
      return run_until_first(planar(g.z), rng, stops, kUnboundedCap).which == 0;
    }
    case LemmaId::kFromZToAlphaZ: {
      // T >= n  iff the ball is not reached at times 0..n-1.
      const auto out = run_until_from(planar(g.z), rng, StopSpec::hit_ball(origin, g.small_r2), g.n - 1);
      return out.kind == StoppingOutcome::Kind::kTimecap;
    }
    case LemmaId::kSqrtNToR: {
      const auto out = run_until_from(planar(g.z), rng, StopSpec::hit_ball(origin, g.small_r2), g.n);
      return out.kind == StoppingOutcome::Kind::kHit;
    }
    case LemmaId::kRHitsNearQ: {
      const Box2 box = box_of(g.z, g.k);
      std::int64_t x = 0, y = 0;
      if (box.contains({x, y})) return true;
      for (std::uint64_t t = 0; t < g.n; ++t) {
        switch (draw_direction(2, rng)) {
          case 0: ++x; break;
          case 1: --x; break;
          case 2: ++y; break;
          default: --y; break;
        }
        if (box.contains({x, y})) return true;
      }
      return false;
    }
    case LemmaId::kBoundaryInSquare: {
      // Visits are tracked on Q(0,k+1). Once Q(0,k) and all its neighbours
      // are visited, no point of Q(0,k) can be on the boundary again.
      const std::int64_t k = g.k, outer = k + 1, side = 2 * outer + 1;
      std::vector<char> seen(static_cast<std::size_t>(side * side), 0);
      auto at = [&](std::int64_t x, std::int64_t y) -> char& {
        return seen[static_cast<std::size_t>((x + outer) * side + (y + outer))];
      };
      auto needed = [&](std::int64_t x, std::int64_t y) {
        return std::abs(x) <= k || std::abs(y) <= k;  // Q(0,k+1) without its corners
      };
      std::int64_t remaining = side * side - 4;
      std::int64_t x = g.z.x, y = g.z.y;
      auto visit = [&] {
        if (std::abs(x) <= outer && std::abs(y) <= outer && needed(x, y)) {
          char& s = at(x, y);
          if (!s) {
            s = 1;
            --remaining;
          }
        }
      };
      visit();
      for (std::uint64_t t = 0; t < g.n && remaining > 0; ++t) {
        switch (draw_direction(2, rng)) {
          case 0: ++x; break;
          case 1: --x; break;
          case 2: ++y; break;
          default: --y; break;
        }
        visit();
      }
      if (remaining == 0) return false;
      for (std::int64_t cx = -k; cx <= k; ++cx) {
        for (std::int64_t cy = -k; cy <= k; ++cy) {
          if (!at(cx, cy)) continue;
          if (!at(cx + 1, cy) || !at(cx - 1, cy) || !at(cx, cy + 1) || !at(cx, cy - 1)) return true;
        }
      }
      return false;
    }
    case LemmaId::kRHitsQ:
      break;
  }
  throw std::logic_error("lemma has no sampler");
}

}  // namespace

LemmaCheckReport lemma_check(LemmaId id, std::span<const LemmaGridPoint> grid, std::uint64_t reps,
                             std::uint64_t master_seed, unsigned threads) {
  if (reps == 0 && id != LemmaId::kRHitsQ) throw InvalidArgument("reps must be positive");
  LemmaCheckReport report;
  report.lemma = id;
  report.master_seed = master_seed;

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const LemmaGridPoint& g = grid[i];
    LemmaPointResult res;
    res.params = g;
    res.label = describe(id, g);
    res.seed = mix_seed(master_seed, i);
    if (const std::string why = hypothesis_violation(id, g); !why.empty()) {
      res.skipped = true;
      res.skip_reason = why;
      report.points.push_back(res);
      continue;
    }
    res.form = claimed_form(id, g);
    if (id == LemmaId::kRHitsQ) {
      const double root = std::sqrt(static_cast<double>(g.n));
      const auto half = static_cast<std::int64_t>(std::ceil(norm(g.z) + static_cast<double>(g.k) + 3.0 * root));
      const auto hp = box_hitting_probability(box_of(g.z, g.k), g.n, half);
      res.estimate = hp.probability;
      res.std_error = hp.truncation_bound;
      res.exact = true;
    } else {
      res.reps = reps;
      const auto hits = replicate(reps, res.seed, threads,
                                  [&](RngStream& rng, std::uint64_t) -> char { return sample_event(id, g, rng); });
      std::uint64_t k = 0;
      for (char h : hits) k += static_cast<std::uint64_t>(h);
      const Summary s = summarize_proportion(k, reps);
      res.estimate = s.mean;
      res.std_error = s.std_error;
    }
    report.points.push_back(res);
  }

  std::vector<LemmaPointResult*> live;
  for (auto& p : report.points) {
    if (!p.skipped) live.push_back(&p);
  }
  if (live.empty()) return report;

  if (id == LemmaId::kRHitsQ) {
    // Least squares of ln(p log n) on |z|^2/n gives the exponent c.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    bool all_positive = true;
    for (auto* p : live) {
      if (!(p->estimate > 0.0)) {
        all_positive = false;
        continue;
      }
      const double x = static_cast<double>(norm2(p->params.z)) / static_cast<double>(p->params.n);
      const double y = std::log(p->estimate / p->form);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(live.size());
    const double denom = m * sxx - sx * sx;
    report.fitted_exponent = denom > 0 ? -(m * sxy - sx * sy) / denom : 0.0;
    for (auto* p : live) {
      const double x = static_cast<double>(norm2(p->params.z)) / static_cast<double>(p->params.n);
      p->form *= std::exp(-report.fitted_exponent * x);
    }
    if (!all_positive || !(report.fitted_exponent > 0.0)) {
      for (auto* p : live) p->ratio = p->form > 0 ? p->estimate / p->form : 0.0;
      report.band = std::numeric_limits<double>::infinity();
      return report;
    }
  }

  std::vector<double> ratios;
  for (auto* p : live) {
    p->ratio = p->estimate / p->form;
    ratios.push_back(p->ratio);
  }
  report.band = band_ratio(ratios);
  report.stable = report.band < kLemmaBandLimit;
  const double lo = *std::min_element(ratios.begin(), ratios.end());
  const double hi = *std::max_element(ratios.begin(), ratios.end());
  if (is_lower_bound(id)) {
    report.fitted_constant = lo;
    report.direction_holds = std::all_of(live.begin(), live.end(),
                                         [](auto* p) { return p->estimate - 3.0 * p->std_error > 0.0; });
  } else {
    report.fitted_constant = hi;
    report.direction_holds = lo > 0.0 && std::all_of(live.begin(), live.end(), [lo](auto* p) {
      return p->estimate - 3.0 * p->std_error <= kLemmaBandLimit * lo * p->form;
    });
  }
  return report;
}

OptionalStoppingCheck optional_stopping_check(const PotentialKernel& kernel, const Cell& z, std::int64_t r,
                                              std::uint64_t reps, std::uint64_t master_seed) {
  if (norm2(z) == 0 || r * r <= norm2(z)) throw InvalidArgument("needs 0 < |z| < r");
  const LatticePoint origin = LatticePoint::origin(2);
  const StopSpec stops[] = {StopSpec::hit_point(origin), StopSpec::exit_ball(origin, SquaredRadius::of_integer(r))};
  struct Sample {
    bool hit = false;
    double value = 0.0;
  };
  const auto samples = replicate(reps, master_seed, 0, [&](RngStream& rng, std::uint64_t) {
    const auto race = run_until_first(to_point(z), rng, stops, kUnboundedCap);
    if (race.which == 0) return Sample{true, 0.0};
    return Sample{false, kernel(to_cell(race.outcome.terminal_point))};
  });
  std::vector<double> values, exits;
  std::uint64_t hits = 0;
  for (const auto& s : samples) {
    values.push_back(s.value);
    if (s.hit) {
      ++hits;
    } else {
      exits.push_back(s.value);
    }
  }
  OptionalStoppingCheck out;
  out.kernel_at_start = kernel(z);
  const Summary v = summarize(values);
  out.mean_stopped_value = v.mean;
  out.std_error = v.std_error;
  const Summary h = summarize_proportion(hits, reps);
  out.hit_probability = h.mean;
  out.hit_std_error = h.std_error;
  const Summary e = summarize(exits);
  out.predicted_hit_probability = 1.0 - out.kernel_at_start / e.mean;
  return out;
}

}  // namespace rwrange
