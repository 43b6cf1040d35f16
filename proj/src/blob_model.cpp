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

#include "blobseer/blob_model.hpp"

#include <bit>

namespace blobseer {

std::optional<Uid128> Uid128::parse_hex(std::string_view hex) {
  auto bytes = from_hex(hex);
  if (!bytes || bytes->size() != 16) return std::nullopt;
  Uid128 uid;
  std::copy(bytes->begin(), bytes->end(), uid.bytes.begin());
  return uid;
}

std::optional<BlobId> BlobId::parse_hex(std::string_view hex) {
  auto uid = Uid128::parse_hex(hex);
  if (!uid) return std::nullopt;
  return BlobId{*uid};
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

Result<BlobLayout> BlobLayout::create(std::uint64_t total_size, std::uint64_t page_size) {
  if (!is_power_of_two(total_size) || !is_power_of_two(page_size)) {
    return Status(Err::not_power_of_two, "total_size and page_size must be powers of 2");
  }
  if (page_size > total_size) {
    return Status(Err::page_larger_than_blob, "page_size exceeds total_size");
  }
  BlobLayout layout{total_size, page_size, total_size / page_size};
  if (layout.depth() > kMaxTreeDepth) {
    return Status(Err::layout_too_deep,
                  "page count exceeds 2^" + std::to_string(kMaxTreeDepth));
  }
  return layout;
}

std::uint32_t BlobLayout::depth() const {
  return static_cast<std::uint32_t>(std::countr_zero(page_count));
}

Result<PageInterval> byte_range_to_page_interval(const BlobLayout& layout, ByteRange range) {
  if (range.size == 0) return Status(Err::zero_size, "access size must be positive");
  if (range.offset > layout.total_size || range.size > layout.total_size - range.offset) {
    return Status(Err::out_of_range, "byte range exceeds blob size");
  }
  std::uint64_t first = range.offset / layout.page_size;
  std::uint64_t last = (range.offset + range.size - 1) / layout.page_size;
  return PageInterval{first, last - first + 1};
}

bool is_page_aligned(const BlobLayout& layout, ByteRange range) {
  return range.size > 0 && range.offset % layout.page_size == 0 &&
         range.size % layout.page_size == 0;
}

bool intervals_intersect(PageInterval a, PageInterval b) {
  if (a.page_len == 0 || b.page_len == 0) return false;
  return a.first_page < b.end() && b.first_page < a.end();
}

}  // namespace blobseer
