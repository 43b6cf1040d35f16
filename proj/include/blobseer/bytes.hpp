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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blobseer/status.hpp"

namespace blobseer {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

// All integers on the wire and in storage keys are little-endian.
void put_u8(Bytes& out, std::uint8_t v);
void put_u16le(Bytes& out, std::uint16_t v);
void put_u32le(Bytes& out, std::uint32_t v);
void put_u64le(Bytes& out, std::uint64_t v);
void put_bytes(Bytes& out, ByteSpan data);

std::uint16_t load_u16le(const std::uint8_t* p);
std::uint32_t load_u32le(const std::uint8_t* p);
std::uint64_t load_u64le(const std::uint8_t* p);

void store_u64le(std::uint8_t* p, std::uint64_t v);

// Bounds-checked sequential reader over a byte span. Every accessor fails
// with Err::truncated_frame instead of reading past the end.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  Result<std::uint8_t> u8();
  Result<std::uint16_t> u16le();
  Result<std::uint32_t> u32le();
  Result<std::uint64_t> u64le();
  Result<ByteSpan> take(std::size_t n);

  ByteSpan rest();  // consumes and returns everything left
  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
};

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

// FNV-1a 64-bit. Shard placement depends on this exact function, so it must
// stay bit-identical across implementations.
std::uint64_t fnv1a64(ByteSpan data, std::uint64_t state = kFnvOffsetBasis);
std::uint64_t fnv1a64_u64(std::uint64_t value, std::uint64_t state);

std::string to_hex(ByteSpan data);
std::optional<Bytes> from_hex(std::string_view hex);

}  // namespace blobseer
