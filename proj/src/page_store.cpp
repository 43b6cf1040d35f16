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

#include "blobseer/page_store.hpp"

#include <algorithm>

namespace blobseer {

std::array<std::uint8_t, 40> PageKey::encode() const {
  std::array<std::uint8_t, 40> out;
  std::copy(blob.uid.bytes.begin(), blob.uid.bytes.end(), out.begin());
  std::copy(write_uuid.uid.bytes.begin(), write_uuid.uid.bytes.end(), out.begin() + 16);
  store_u64le(out.data() + 32, page_index);
  return out;
}

void encode_page_ref(Bytes& out, const PageRef& ref) {
  put_u16le(out, static_cast<std::uint16_t>(ref.provider.size()));
  put_bytes(out, ByteSpan(reinterpret_cast<const std::uint8_t*>(ref.provider.data()),
                          ref.provider.size()));
  auto key = ref.key.encode();
  put_bytes(out, key);
}

Result<PageRef> decode_page_ref(ByteReader& reader) {
  auto len = reader.u16le();
  if (!len.ok()) return len.status();
  auto addr = reader.take(len.value());
  if (!addr.ok()) return addr.status();
  auto key_bytes = reader.take(40);
  if (!key_bytes.ok()) return key_bytes.status();

  PageRef ref;
  ref.provider.assign(reinterpret_cast<const char*>(addr.value().data()), addr.value().size());
  const std::uint8_t* p = key_bytes.value().data();
  std::copy(p, p + 16, ref.key.blob.uid.bytes.begin());
  std::copy(p + 16, p + 32, ref.key.write_uuid.uid.bytes.begin());
  ref.key.page_index = load_u64le(p + 32);
  return ref;
}

Status PageStore::put_page(const PageRecord& record, std::uint64_t page_size) {
  if (record.content.size() != page_size) {
    return Status(Err::out_of_range, "page content length " +
                                         std::to_string(record.content.size()) +
                                         " does not match page size " +
                                         std::to_string(page_size));
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pages_.find(record.key);
  if (it != pages_.end()) {
    if (it->second != record.content) {
      ++violations_;
      return Status(Err::immutability_violation, "page key re-put with different content");
    }
    return ok_status();  // idempotent re-put
  }
  if (bytes_stored_ + record.content.size() > capacity_bytes_) {
    return Status(Err::capacity_exceeded,
                  "provider capacity " + std::to_string(capacity_bytes_) + " bytes exceeded");
  }
  bytes_stored_ += record.content.size();
  pages_.emplace(record.key, record.content);
  return ok_status();
}

Result<Bytes> PageStore::get_page(const PageKey& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pages_.find(key);
  if (it == pages_.end()) return Status(Err::not_found, "page not stored here");
  return it->second;
}

std::pair<std::uint64_t, std::uint64_t> PageStore::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return {pages_.size(), bytes_stored_};
}

std::uint64_t PageStore::immutability_violations() const {
  std::lock_guard<std::mutex> lock(mu_);
  return violations_;
}

Status PageStore::debug_flip_byte(std::uint64_t page_selector, std::uint64_t byte_selector) {
  std::lock_guard<std::mutex> lock(mu_);
  if (pages_.empty()) return Status(Err::not_found, "no pages stored");
  auto it = pages_.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(page_selector % pages_.size()));
  Bytes& content = it->second;
  content[byte_selector % content.size()] ^= 0x01;
  return ok_status();
}

}  // namespace blobseer
