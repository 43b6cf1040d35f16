// Copyright 2026 The blobseer-lite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "blobseer/bytes.hpp"
#include "blobseer/status.hpp"

namespace blobseer {

// Snapshot version of a blob. Versions are consecutive integers starting at
// 0; version 0 is the implicit all-zero string and is never stored.
using Version = std::uint64_t;

// Trees are bounded to 2^40 pages so descriptors fit fixed-width encodings.
inline constexpr std::uint32_t kMaxTreeDepth = 40;

struct Uid128 {
  std::array<std::uint8_t, 16> bytes{};

  auto operator<=>(const Uid128&) const = default;

  std::string hex() const { return to_hex(bytes); }
  static std::optional<Uid128> parse_hex(std::string_view hex);
};

// Globally unique blob identifier, 128 random bits minted by the version
// manager at allocation time.
struct BlobId {
  Uid128 uid;

  auto operator<=>(const BlobId&) const = default;
  std::string hex() const { return uid.hex(); }
  static std::optional<BlobId> parse_hex(std::string_view hex);
};

struct BlobIdHash {
  std::size_t operator()(const BlobId& id) const {
    return static_cast<std::size_t>(fnv1a64(id.uid.bytes));
  }
};

// Geometry of one logical string. total_size and page_size are powers of 2,
// so page_count is one as well.
struct BlobLayout {
  std::uint64_t total_size = 0;
  std::uint64_t page_size = 0;
  std::uint64_t page_count = 0;

  static Result<BlobLayout> create(std::uint64_t total_size, std::uint64_t page_size);

  std::uint32_t depth() const;  // log2(page_count)

  auto operator<=>(const BlobLayout&) const = default;
};

// A byte-granularity access window into a blob.
struct ByteRange {
  std::uint64_t offset = 0;
  std::uint64_t size = 0;

  auto operator<=>(const ByteRange&) const = default;
};

// Half-open run of pages [first_page, first_page + page_len).
struct PageInterval {
  std::uint64_t first_page = 0;
  std::uint64_t page_len = 0;

  std::uint64_t end() const { return first_page + page_len; }
  bool contains(std::uint64_t page) const {
    return page >= first_page && page < end();
  }

  auto operator<=>(const PageInterval&) const = default;
};

bool is_power_of_two(std::uint64_t x);

// Minimal page interval covering the byte range, edge pages included.
Result<PageInterval> byte_range_to_page_interval(const BlobLayout& layout, ByteRange range);

// True iff the range starts and ends on page boundaries and is nonempty.
bool is_page_aligned(const BlobLayout& layout, ByteRange range);

bool intervals_intersect(PageInterval a, PageInterval b);

}  // namespace blobseer
