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
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace blobseer {

// Error codes are stable: the byte value is what error frames carry on the
// wire, so renumbering breaks cross-version agreement.
enum class Err : std::uint8_t {
  ok = 0,

  // geometry / request validation
  out_of_range = 1,
  zero_size = 2,
  not_power_of_two = 3,
  page_larger_than_blob = 4,
  layout_too_deep = 5,
  leaf_has_no_children = 6,
  segment_out_of_tree = 7,
  link_mismatch = 8,
  arity_mismatch = 9,
  unaligned_write = 10,

  // store semantics
  not_found = 16,
  immutability_violation = 17,
  capacity_exceeded = 18,
  node_missing = 19,
  page_missing = 20,

  // provider manager
  duplicate_address = 24,
  unknown_provider = 25,
  no_providers = 26,

  // version manager
  unknown_blob = 32,
  segment_out_of_range = 33,
  unknown_version = 34,
  already_completed = 35,
  version_not_published = 36,

  // wire / transport
  bad_magic = 48,
  bad_protocol_version = 49,
  truncated_frame = 50,
  trailing_bytes = 51,
  bad_batch_count = 52,
  unknown_message_type = 53,
  batch_too_large = 54,
  destination_unreachable = 55,
  timeout = 56,
  correlation_error = 57,

  // services / harness
  shard_unavailable = 64,
  provider_unavailable = 65,
  metadata_store_unavailable = 66,
  port_in_use = 72,
  invalid_config = 73,
  mismatch_found = 74,

  internal = 255,
};

std::string_view err_name(Err code);

class Status {
 public:
  Status() = default;
  Status(Err code, std::string message, std::uint64_t detail = 0)
      : code_(code), detail_(detail), message_(std::move(message)) {}

  bool ok() const { return code_ == Err::ok; }
  Err code() const { return code_; }
  const std::string& message() const { return message_; }

  // Extra machine-readable context; READ uses it to carry the latest
  // published version alongside version_not_published.
  std::uint64_t detail() const { return detail_; }

  std::string to_string() const;

 private:
  Err code_ = Err::ok;
  std::uint64_t detail_ = 0;
  std::string message_;
};

inline Status ok_status() { return Status(); }

// Minimal value-or-status holder. value() on an error aborts loudly; call
// sites that can recover must check ok() first.
template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}  // NOLINT(runtime/explicit)
  Result(Status status) : status_(std::move(status)) {
    if (status_.ok()) {
      std::fprintf(stderr, "Result constructed from ok Status\n");
      std::abort();
    }
  }

  bool ok() const { return status_.ok(); }
  const Status& status() const { return status_; }

  T& value() & {
    check();
    return *value_;
  }
  const T& value() const& {
    check();
    return *value_;
  }
  T&& value() && {
    check();
    return std::move(*value_);
  }

 private:
  void check() const {
    if (!value_.has_value()) {
      std::fprintf(stderr, "Result::value() on error: %s\n",
                   status_.to_string().c_str());
      std::abort();
    }
  }

  Status status_;
  std::optional<T> value_;
};

}  // namespace blobseer
