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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "blobseer/blob_model.hpp"
#include "blobseer/page_store.hpp"
#include "blobseer/status.hpp"

namespace blobseer {

// A node of the versioned segment tree covers (offset, size) in page units:
// size is a power of 2 and offset a multiple of size. A node of size 1 is a
// leaf covering a single page.
struct NodeDescriptor {
  std::uint64_t offset = 0;
  std::uint64_t size = 0;

  PageInterval interval() const { return PageInterval{offset, size}; }
  bool is_leaf() const { return size == 1; }

  auto operator<=>(const NodeDescriptor&) const = default;
};

// Root descriptor of a blob's tree: covers every page.
inline NodeDescriptor root_descriptor(const BlobLayout& layout) {
  return NodeDescriptor{0, layout.page_count};
}

// Uniquely identifies one immutable tree node. Version-0 nodes are never
// materialized anywhere in the system.
struct MetadataNodeKey {
  BlobId blob;
  Version version = 0;
  NodeDescriptor descriptor;

  auto operator<=>(const MetadataNodeKey&) const = default;

  // Canonical encoding used for sharding and storage:
  // blob(16) || version(8 LE) || offset(8 LE) || size(8 LE)
  std::array<std::uint8_t, 40> encode() const;
};

struct MetadataNodeKeyHash {
  std::size_t operator()(const MetadataNodeKey& key) const {
    auto enc = key.encode();
    return static_cast<std::size_t>(fnv1a64(enc));
  }
};

// Version number precomputed for a child outside the written segment.
// child_version 0 is the sentinel for an all-zero, never-materialized
// subtree.
struct BorderLink {
  NodeDescriptor child_descriptor;
  Version child_version = 0;

  auto operator<=>(const BorderLink&) const = default;
};

struct InnerBody {
  Version left_version = 0;
  Version right_version = 0;

  auto operator<=>(const InnerBody&) const = default;
};

struct LeafBody {
  PageRef page_ref;

  bool operator==(const LeafBody&) const = default;
};

struct MetadataNode {
  MetadataNodeKey key;
  std::variant<InnerBody, LeafBody> body;

  bool is_leaf() const { return std::holds_alternative<LeafBody>(body); }
  const InnerBody& inner() const { return std::get<InnerBody>(body); }
  const LeafBody& leaf() const { return std::get<LeafBody>(body); }

  bool operator==(const MetadataNode&) const = default;
};

inline constexpr std::uint8_t kNodeTagInner = 0x01;
inline constexpr std::uint8_t kNodeTagLeaf = 0x02;

// Body encoding: 0x01 || left_version(8) || right_version(8), or
// 0x02 || PageRef.
Bytes encode_node_body(const MetadataNode& node);
Result<MetadataNode> decode_node_body(const MetadataNodeKey& key, ByteSpan body);

// ((offset, size/2), (offset + size/2, size/2)); leaves have no children.
Result<std::pair<NodeDescriptor, NodeDescriptor>> children_of(NodeDescriptor d);

// Descriptors of every node whose interval intersects the segment, in
// pre-order (node before children, left before right). These are exactly the
// nodes a write of `segment` creates.
Result<std::vector<NodeDescriptor>> write_node_set(NodeDescriptor root, PageInterval segment);

// Children of write-set nodes that do not themselves intersect the segment,
// ascending by offset. A write needs exactly one version link per entry to
// complete its tree.
Result<std::vector<NodeDescriptor>> border_children(NodeDescriptor root, PageInterval segment);

// Materializes version v's tree for a write of `segment`: one node per
// write_node_set descriptor. Leaves carry page_refs in page order; inner
// children either point at v (inside the segment) or at the matching border
// link's version.
Result<std::vector<MetadataNode>> build_write_tree(const BlobId& blob, Version v,
                                                   PageInterval segment,
                                                   std::span<const PageRef> page_refs,
                                                   std::span<const BorderLink> links,
                                                   NodeDescriptor root);

// One resolved page of a lookup: either a reference to a stored page or
// nothing, meaning the page is all zero at the requested version.
struct PageSlot {
  std::uint64_t page_index = 0;
  std::optional<PageRef> ref;

  bool operator==(const PageSlot&) const = default;
};

// Retrieval capability supplied by the caller. Keys passed in one invocation
// belong to one tree depth and may be resolved concurrently and in any
// order; the result vector must align with the input span.
using NodeFetch = std::function<Result<std::vector<std::optional<MetadataNode>>>(
    std::span<const MetadataNodeKey>)>;

// Walks version v's tree over `segment` and resolves every covered page,
// level by level. Subtrees behind a version-0 link resolve to zero pages
// without any fetch; v = 0 resolves everything to zero with no fetch at all.
Result<std::vector<PageSlot>> plan_lookup(const NodeFetch& fetch, const BlobId& blob,
                                          Version v, PageInterval segment,
                                          NodeDescriptor root);

}  // namespace blobseer
