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

// Small statistics helpers and the replica runner shared by every Monte
// Carlo experiment.

#ifndef RWRANGE_STATS_HPP
#define RWRANGE_STATS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "rwrange/rng.hpp"

namespace rwrange {

struct Summary {
  double mean = 0.0;
  double std_error = 0.0;
  double std_dev = 0.0;
  std::size_t count = 0;
};

/// Sample mean, unbiased standard deviation and standard error of the mean.
/// Summation runs in index order so the result does not depend on how the
/// samples were produced.
Summary summarize(std::span<const double> samples);

/// Binomial proportion with standard error sqrt(p(1-p)/N).
Summary summarize_proportion(std::uint64_t successes, std::uint64_t trials);

/// max/min of strictly positive values; +inf if any value is <= 0.
double band_ratio(std::span<const double> values);

/// Number of worker threads used when a caller passes 0.
unsigned default_thread_count();

/// Runs `fn(rng, i)` for i in [0, reps) with rng = derive_stream(master_seed, i)
/// and returns the results indexed by replica. `threads` only changes speed.
template <typename Fn>
auto replicate(std::uint64_t reps, std::uint64_t master_seed, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(std::declval<RngStream&>(), std::uint64_t{}))> {
  using T = decltype(fn(std::declval<RngStream&>(), std::uint64_t{}));
  std::vector<T> out(static_cast<std::size_t>(reps));
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(reps, 1)));

  auto run_one = [&](std::uint64_t i) {
    RngStream rng = derive_stream(master_seed, i);
    out[static_cast<std::size_t>(i)] = fn(rng, i);
  };
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < reps; ++i) run_one(i);
    return out;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= reps) return;
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(reps);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace rwrange

#endif  // RWRANGE_STATS_HPP
