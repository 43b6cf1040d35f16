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

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "blobseer/blob_model.hpp"
#include "blobseer/bytes.hpp"
#include "blobseer/status.hpp"

namespace blobseer {

// Client-minted identifier for one WRITE invocation. Freshness of pages is
// realized by key uniqueness: a write never reuses another write's keys.
struct WriteId {
  Uid128 uid;

  auto operator<=>(const WriteId&) const = default;
  std::string hex() const { return uid.hex(); }
};

// Identifies one stored page. page_index counts pages within the written
// segment, not within the blob.
struct PageKey {
  BlobId blob;
  WriteId write_uuid;
  std::uint64_t page_index = 0;

  auto operator<=>(const PageKey&) const = default;

  // blob(16) || write_uuid(16) || page_index(8 LE)
  std::array<std::uint8_t, 40> encode() const;
};

struct PageKeyHash {
  std::size_t operator()(const PageKey& key) const {
    auto enc = key.encode();
    return static_cast<std::size_t>(fnv1a64(enc));
  }
};

// Locator sufficient to retrieve a page from exactly one provider.
struct PageRef {
  std::string provider;
  PageKey key;

  bool operator==(const PageRef&) const = default;
};

// addr_len(u16 LE) || addr utf-8 || PageKey(40)
void encode_page_ref(Bytes& out, const PageRef& ref);
Result<PageRef> decode_page_ref(ByteReader& reader);

struct PageRecord {
  PageKey key;
  Bytes content;
};

// In-memory immutable page storage for one data provider. Pages are never
// deleted or modified; re-putting an identical record is a no-op.
class PageStore {
 public:
  explicit PageStore(std::uint64_t capacity_bytes) : capacity_bytes_(capacity_bytes) {}

  // page_size is the writer's declared page size for the record's blob;
  // content length must match it exactly.
  Status put_page(const PageRecord& record, std::uint64_t page_size);

  Result<Bytes> get_page(const PageKey& key) const;

  // (page_count, bytes_stored)
  std::pair<std::uint64_t, std::uint64_t> stats() const;

  std::uint64_t capacity_bytes() const { return capacity_bytes_; }
  std::uint64_t immutability_violations() const;

  // Test hook for checker self-tests: flips one bit of one stored page.
  // Never reachable through the wire protocol.
  Status debug_flip_byte(std::uint64_t page_selector, std::uint64_t byte_selector);

 private:
  const std::uint64_t capacity_bytes_;
  mutable std::mutex mu_;
  std::unordered_map<PageKey, Bytes, PageKeyHash> pages_;
  std::uint64_t bytes_stored_ = 0;
  std::uint64_t violations_ = 0;
};

}  // namespace blobseer
