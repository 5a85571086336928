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


#include "rwrange/range_codec.hpp"

#include <algorithm>
#include <unordered_set>

#include "rwrange/bitio.hpp"

namespace rwrange {
namespace {

constexpr std::uint8_t kMagic[4] = {'R', 'W', 'R', 'C'};

using CellSet = std::unordered_set<Cell, CellHash>;

void validate_range(const RangeSet& range, std::uint64_t n) {
  if (range.dim() != 2) throw CodecError(CodecErrorKind::kInvalidRange, "only planar ranges are coded");
  if (!range.contains(LatticePoint::origin(2))) {
    throw CodecError(CodecErrorKind::kInvalidRange, "range does not contain the origin");
  }
  const Box2 reach = Box2::square(static_cast<std::int64_t>(n));
  const Box2 bb = bounding_box(range);
  if (!reach.contains({bb.x0, bb.y0}) || !reach.contains({bb.x1, bb.y1})) {
    throw CodecError(CodecErrorKind::kInvalidRange, "range leaves [-n,n]^2");
  }
  if (!is_connected(range)) throw CodecError(CodecErrorKind::kInvalidRange, "range is not connected");
}

std::vector<Cell> sorted(const CellSet& s) {
  std::vector<Cell> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

const char* to_string(CodecErrorKind kind) {
  switch (kind) {
    case CodecErrorKind::kInvalidRange: return "invalid range";
    case CodecErrorKind::kBadMagic: return "bad magic";
    case CodecErrorKind::kBadVersion: return "unsupported version";
    case CodecErrorKind::kBadHeader: return "bad header";
    case CodecErrorKind::kTruncated: return "truncated payload";
    case CodecErrorKind::kFillMismatch: return "fill-bit count mismatch";
    case CodecErrorKind::kHierarchy: return "inconsistent hierarchy";
  }
  return "codec error";
}

std::vector<std::uint8_t> RangeBitStream::to_bytes() const {
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kRangeCodecVersion);
  out.push_back(2);
  for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>((n >> s) & 0xFF));
  out.push_back(levels);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

RangeBitStream RangeBitStream::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw CodecError(CodecErrorKind::kBadMagic, "expected 'RWRC'");
  }
  if (bytes.size() < kRangeCodecHeaderBytes) throw CodecError(CodecErrorKind::kBadHeader, "short header");
  if (bytes[4] != kRangeCodecVersion) {
    throw CodecError(CodecErrorKind::kBadVersion, "version " + std::to_string(bytes[4]));
  }
  if (bytes[5] != 2) throw CodecError(CodecErrorKind::kBadHeader, "dimension " + std::to_string(bytes[5]));
  RangeBitStream s;
  for (std::size_t i = 6; i < 14; ++i) s.n = (s.n << 8) | bytes[i];
  s.levels = bytes[14];
  s.payload.assign(bytes.begin() + kRangeCodecHeaderBytes, bytes.end());
  s.total_bits = static_cast<std::uint64_t>(s.payload.size()) * 8;
  return s;
}

std::vector<Component> finite_complement_components(const RangeSet& boundary) {
  const Box2 window = bounding_box(boundary).expanded(1);
  ComponentLabeling lab = complement_components(boundary, window);
  std::vector<Component> finite;
  for (auto& c : lab.components) {
    if (!c.infinite) finite.push_back(std::move(c));
  }
  return finite;
}

RangeBitStream encode_range(const RangeSet& range, std::uint64_t n) {
  validate_range(range, n);
  const std::vector<std::int64_t> ks = scale_schedule(n);
  const std::size_t m = ks.size() - 1;
  const RangeSet boundary = inner_boundary(range);

  // active[j]: centers of scale-k_j boxes meeting the boundary.
  std::vector<CellSet> active(m + 1);
  for (const auto& p : boundary) {
    const Cell c = to_cell(p);
    for (std::size_t j = 0; j <= m; ++j) active[j].insert(box_center(c, ks[j]));
  }

  BitWriter w;
  for (std::size_t j = m; j-- > 0;) {
    for (const Cell& parent : sorted(active[j + 1])) {
      for (const Cell& child : child_centers(parent, ks[j])) w.put(active[j].contains(child));
    }
  }
  for (const Component& comp : finite_complement_components(boundary)) {
    w.put(range.contains(to_point(comp.cells.front())));
  }

  RangeBitStream s;
  s.n = n;
  s.levels = static_cast<std::uint8_t>(m);
  s.total_bits = w.bit_count();
  s.payload = std::move(w).take();
  return s;
}

DecodedRange decode_range(const RangeBitStream& stream) {
  const std::vector<std::int64_t> ks = scale_schedule(stream.n);
  const std::size_t m = ks.size() - 1;
  if (stream.levels != m) {
    throw CodecError(CodecErrorKind::kBadHeader, "level count " + std::to_string(stream.levels) +
                                                     " does not match n (expected " + std::to_string(m) + ")");
  }
  if (stream.total_bits > static_cast<std::uint64_t>(stream.payload.size()) * 8) {
    throw CodecError(CodecErrorKind::kTruncated, "payload shorter than its bit count");
  }
  BitReader r(stream.payload, stream.total_bits);
  const Box2 reach = Box2::square(static_cast<std::int64_t>(stream.n));

  std::vector<Cell> level{{0, 0}};
  for (std::size_t j = m; j-- > 0;) {
    std::vector<Cell> next;
    for (const Cell& parent : level) {
      bool any = false;
      for (const Cell& child : child_centers(parent, ks[j])) {
        const auto bit = r.get();
        if (!bit) throw CodecError(CodecErrorKind::kTruncated, "stream ends inside the hierarchy");
        if (*bit) {
          next.push_back(child);
          any = true;
        }
      }
      if (!any) throw CodecError(CodecErrorKind::kHierarchy, "active box with no active child");
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }

  RangeSet boundary(2);
  for (const Cell& c : level) {
    if (!reach.contains(c)) throw CodecError(CodecErrorKind::kHierarchy, "boundary cell outside [-n,n]^2");
    boundary.insert(to_point(c));
  }

  std::vector<Component> finite;
  try {
    finite = finite_complement_components(boundary);
  } catch (const InvalidArgument& e) {
    throw CodecError(CodecErrorKind::kHierarchy, e.what());
  }
  RangeSet range = boundary;
  for (const Component& comp : finite) {
    const auto bit = r.get();
    if (!bit) throw CodecError(CodecErrorKind::kFillMismatch, "too few fill bits");
    if (*bit) {
      for (const Cell& c : comp.cells) range.insert(to_point(c));
    }
  }

  // Anything left must be zero padding inside the last byte.
  const std::uint64_t used = r.position();
  const std::uint64_t padded = (used + 7) / 8 * 8;
  if (stream.total_bits > padded) throw CodecError(CodecErrorKind::kFillMismatch, "trailing payload bits");
  while (const auto bit = r.get()) {
    if (*bit) throw CodecError(CodecErrorKind::kFillMismatch, "nonzero padding");
  }
  return {std::move(range), stream.n};
}

DecodedRange decode_range(std::span<const std::uint8_t> bytes) {
  return decode_range(RangeBitStream::from_bytes(bytes));
}

CodeLengthBreakdown code_length_breakdown(const RangeSet& range, std::uint64_t n) {
  const std::vector<std::int64_t> ks = scale_schedule(n);
  const RangeSet boundary = inner_boundary(range);
  CodeLengthBreakdown b;
  std::uint64_t boxes = 0;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const std::size_t count = tile_indicator(boundary, ks[j], n).count();
    b.active_per_level.push_back(count);
    if (j >= 1) boxes += count;
  }
  b.finite_components = finite_complement_components(boundary).size();
  b.payload_bits = 9 * boxes + b.finite_components;
  return b;
}

}  // namespace rwrange
