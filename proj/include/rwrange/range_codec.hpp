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


// Lossless coder for planar walk ranges ("RWRC" format, version 1).
//
// Payload layout, for a range R of an n-step walk with scale schedule
// k_0 < ... < k_m:
//
//   1. Hierarchy. For j = m-1 down to 0, for every active box of scale
//      k_{j+1} in lexicographic order of its center, nine bits tell which of
//      its scale-k_j children (row-major, see child_centers) meet the inner
//      boundary of R. The top level is always the single box Q(0, k_m) and is
//      not transmitted. Level-0 active boxes are exactly the boundary cells.
//   2. Fill. For every finite 4-connected component of
//      [-n-1, n+1]^2 \ boundary, ordered by minimal cell, one bit that is set
//      iff the component lies inside R.
//
// File: 'R','W','R','C', version (1 byte), d (1 byte, = 2), n (8 bytes,
// big-endian), m (1 byte), payload, zero padding to a byte boundary.

#ifndef RWRANGE_RANGE_CODEC_HPP
#define RWRANGE_RANGE_CODEC_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rwrange/planar.hpp"
#include "rwrange/range_set.hpp"

namespace rwrange {

inline constexpr std::uint8_t kRangeCodecVersion = 1;
inline constexpr std::size_t kRangeCodecHeaderBytes = 15;

enum class CodecErrorKind {
  kInvalidRange,
  kBadMagic,
  kBadVersion,
  kBadHeader,
  kTruncated,
  kFillMismatch,
  kHierarchy,
};

const char* to_string(CodecErrorKind kind);

class CodecError : public std::runtime_error {
 public:
  CodecError(CodecErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  CodecErrorKind kind() const noexcept { return kind_; }

 private:
  CodecErrorKind kind_;
};

struct RangeBitStream {
  std::uint64_t n = 0;
  std::uint8_t levels = 0;  // m
  std::vector<std::uint8_t> payload;
  std::uint64_t total_bits = 0;  // payload only

  /// Header followed by the padded payload.
  std::vector<std::uint8_t> to_bytes() const;
  /// Parses the header; total_bits is set to the full payload byte length
  /// and is tightened by decoding.
  static RangeBitStream from_bytes(std::span<const std::uint8_t> bytes);
};

struct DecodedRange {
  RangeSet range;
  std::uint64_t n = 0;
};

RangeBitStream encode_range(const RangeSet& range, std::uint64_t n);

DecodedRange decode_range(const RangeBitStream& stream);
DecodedRange decode_range(std::span<const std::uint8_t> bytes);

/// Expected payload size, recounted from tile indicators and components:
/// 9 * (active boxes at levels 1..m) + (finite complement components).
struct CodeLengthBreakdown {
  std::vector<std::size_t> active_per_level;  // index j = level j, 0..m
  std::size_t finite_components = 0;
  std::uint64_t payload_bits = 0;
};
CodeLengthBreakdown code_length_breakdown(const RangeSet& range, std::uint64_t n);

/// Finite components of the complement of `boundary` inside its bounding box
/// grown by one cell. These coincide, with the same order, with the finite
/// components in [-n-1, n+1]^2 for any boundary inside [-n, n]^2.
std::vector<Component> finite_complement_components(const RangeSet& boundary);

}  // namespace rwrange

#endif  // RWRANGE_RANGE_CODEC_HPP
