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


#include "rwrange/stats.hpp"

#include <limits>

namespace rwrange {

Summary summarize(std::span<const double> samples) {
  Summary s;
  s.count = samples.size();
  if (samples.empty()) return s;
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2) return s;
  double ss = 0.0;
  for (double x : samples) ss += (x - s.mean) * (x - s.mean);
  s.std_dev = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  s.std_error = s.std_dev / std::sqrt(static_cast<double>(samples.size()));
  return s;
}

Summary summarize_proportion(std::uint64_t successes, std::uint64_t trials) {
  Summary s;
  s.count = static_cast<std::size_t>(trials);
  if (trials == 0) return s;
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  s.mean = p;
  s.std_dev = std::sqrt(p * (1.0 - p));
  s.std_error = s.std_dev / std::sqrt(static_cast<double>(trials));
  return s;
}

double band_ratio(std::span<const double> values) {
  if (values.empty()) return std::numeric_limits<double>::infinity();
  double lo = values.front();
  double hi = values.front();
  for (double v : values) {
    if (!(v > 0.0)) return std::numeric_limits<double>::infinity();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi / lo;
}

unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace rwrange
