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

#ifndef RWRANGE_RNG_HPP
#define RWRANGE_RNG_HPP

#include <cstdint>
#include <limits>

namespace rwrange {

/// Stafford "mix13" finalizer, as used by SplitMix64.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Combines a seed with a tag into a new 64-bit seed. Used to give
/// independent sub-experiments their own master seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
  return mix64(mix64(seed ^ 0x243F6A8885A308D3ULL) + mix64(tag + 0x13198A2E03707344ULL));
}

/// Counter-based random stream.
///
/// Output number `c` is a pure function of (master_seed, stream_id, c):
///
///     key    = mix64(master_seed ^ mix64(stream_id + G))
///     out(c) = mix64(key + (c + 1) * G)
///
/// with G the 64-bit golden-ratio increment. No platform-dependent state is
/// involved, so replicas can be regenerated anywhere from their ids.
class RngStream {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  constexpr RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
      : master_seed_(master_seed),
        stream_id_(stream_id),
        key_(mix64(master_seed ^ mix64(stream_id + kGamma))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept { return next_u64(); }

  constexpr std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
  }

  /// Uniform integer in [0, bound) by rejection, so there is no modulo bias.
  /// `bound` must be positive.
  constexpr std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    // Largest multiple of `bound` representable is 2^64 - (2^64 mod bound).
    const std::uint64_t reject_from = -(-bound % bound);
    for (;;) {
      const std::uint64_t x = next_u64();
      if (reject_from == 0 || x < reject_from) return x % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Bernoulli(p) draw.
  constexpr bool bernoulli(double p) noexcept { return uniform01() < p; }

  constexpr std::uint64_t master_seed() const noexcept { return master_seed_; }
  constexpr std::uint64_t stream_id() const noexcept { return stream_id_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

constexpr RngStream derive_stream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept {
  return RngStream(master_seed, stream_id);
}

}  // namespace rwrange

#endif  // RWRANGE_RNG_HPP
