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

#include "blobseer/bytes.hpp"

namespace blobseer {

void put_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

void put_u16le(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32le(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64le(Bytes& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_bytes(Bytes& out, ByteSpan data) {
  out.insert(out.end(), data.begin(), data.end());
}

std::uint16_t load_u16le(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t load_u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint64_t load_u64le(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

void store_u64le(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

Result<std::uint8_t> ByteReader::u8() {
  if (remaining() < 1) return Status(Err::truncated_frame, "expected u8");
  return data_[pos_++];
}

Result<std::uint16_t> ByteReader::u16le() {
  if (remaining() < 2) return Status(Err::truncated_frame, "expected u16");
  std::uint16_t v = load_u16le(data_.data() + pos_);
  pos_ += 2;
  return v;
}

Result<std::uint32_t> ByteReader::u32le() {
  if (remaining() < 4) return Status(Err::truncated_frame, "expected u32");
  std::uint32_t v = load_u32le(data_.data() + pos_);
  pos_ += 4;
  return v;
}

Result<std::uint64_t> ByteReader::u64le() {
  if (remaining() < 8) return Status(Err::truncated_frame, "expected u64");
  std::uint64_t v = load_u64le(data_.data() + pos_);
  pos_ += 8;
  return v;
}

Result<ByteSpan> ByteReader::take(std::size_t n) {
  if (remaining() < n) return Status(Err::truncated_frame, "expected " + std::to_string(n) + " bytes");
  ByteSpan s = data_.subspan(pos_, n);
  pos_ += n;
  return s;
}

ByteSpan ByteReader::rest() {
  ByteSpan s = data_.subspan(pos_);
  pos_ = data_.size();
  return s;
}

std::uint64_t fnv1a64(ByteSpan data, std::uint64_t state) {
  for (std::uint8_t b : data) {
    state ^= b;
    state *= kFnvPrime;
  }
  return state;
}

std::uint64_t fnv1a64_u64(std::uint64_t value, std::uint64_t state) {
  for (int i = 0; i < 8; ++i) {
    state ^= static_cast<std::uint8_t>(value >> (8 * i));
    state *= kFnvPrime;
  }
  return state;
}

std::string to_hex(ByteSpan data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

static int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

std::string_view err_name(Err code) {
  switch (code) {
    case Err::ok: return "ok";
    case Err::out_of_range: return "out_of_range";
    case Err::zero_size: return "zero_size";
    case Err::not_power_of_two: return "not_power_of_two";
    case Err::page_larger_than_blob: return "page_larger_than_blob";
    case Err::layout_too_deep: return "layout_too_deep";
    case Err::leaf_has_no_children: return "leaf_has_no_children";
    case Err::segment_out_of_tree: return "segment_out_of_tree";
    case Err::link_mismatch: return "link_mismatch";
    case Err::arity_mismatch: return "arity_mismatch";
    case Err::unaligned_write: return "unaligned_write";
    case Err::not_found: return "not_found";
    case Err::immutability_violation: return "immutability_violation";
    case Err::capacity_exceeded: return "capacity_exceeded";
    case Err::node_missing: return "node_missing";
    case Err::page_missing: return "page_missing";
    case Err::duplicate_address: return "duplicate_address";
    case Err::unknown_provider: return "unknown_provider";
    case Err::no_providers: return "no_providers";
    case Err::unknown_blob: return "unknown_blob";
    case Err::segment_out_of_range: return "segment_out_of_range";
    case Err::unknown_version: return "unknown_version";
    case Err::already_completed: return "already_completed";
    case Err::version_not_published: return "version_not_published";
    case Err::bad_magic: return "bad_magic";
    case Err::bad_protocol_version: return "bad_protocol_version";
    case Err::truncated_frame: return "truncated_frame";
    case Err::trailing_bytes: return "trailing_bytes";
    case Err::bad_batch_count: return "bad_batch_count";
    case Err::unknown_message_type: return "unknown_message_type";
    case Err::batch_too_large: return "batch_too_large";
    case Err::destination_unreachable: return "destination_unreachable";
    case Err::timeout: return "timeout";
    case Err::correlation_error: return "correlation_error";
    case Err::shard_unavailable: return "shard_unavailable";
    case Err::provider_unavailable: return "provider_unavailable";
    case Err::metadata_store_unavailable: return "metadata_store_unavailable";
    case Err::port_in_use: return "port_in_use";
    case Err::invalid_config: return "invalid_config";
    case Err::mismatch_found: return "mismatch_found";
    case Err::internal: return "internal";
  }
  return "unknown";
}

std::string Status::to_string() const {
  if (ok()) return "ok";
  std::string s(err_name(code_));
  if (!message_.empty()) {
    s += ": ";
    s += message_;
  }
  return s;
}

}  // namespace blobseer
