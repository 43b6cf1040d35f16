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
#include <unordered_map>

#include "blobseer/bytes.hpp"
#include "blobseer/segment_tree.hpp"
#include "blobseer/status.hpp"

namespace blobseer {

using ShardId = std::uint32_t;

// Stable shard placement: FNV-1a 64 over the canonical 40-byte key encoding,
// reduced mod shard_count. Pure function of the key bytes, identical in
// every process. shard_count must be >= 1.
ShardId shard_of(const MetadataNodeKey& key, std::uint32_t shard_count);

// One shard of the metadata service: a write-once in-memory key-value store
// for tree nodes. Values are kept as their canonical body encoding so the
// write-once check is a byte comparison.
class MetadataShard {
 public:
  // Idempotent for identical content; a different value under an existing
  // key is an immutability violation and signals a protocol bug upstream.
  Status put_node(const MetadataNode& node);

  Result<MetadataNode> get_node(const MetadataNodeKey& key) const;

  std::uint64_t node_count() const;
  std::uint64_t immutability_violations() const;

 private:
  struct KeyBytesHash {
    std::size_t operator()(const std::array<std::uint8_t, 40>& k) const {
      return static_cast<std::size_t>(fnv1a64(k));
    }
  };

  mutable std::mutex mu_;
  std::unordered_map<std::array<std::uint8_t, 40>, Bytes, KeyBytesHash> nodes_;
  std::uint64_t violations_ = 0;
};

}  // namespace blobseer
