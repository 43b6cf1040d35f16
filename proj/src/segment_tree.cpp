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

#include "blobseer/segment_tree.hpp"

#include <algorithm>
#include <map>

namespace blobseer {

std::array<std::uint8_t, 40> MetadataNodeKey::encode() const {
  std::array<std::uint8_t, 40> out;
  std::copy(blob.uid.bytes.begin(), blob.uid.bytes.end(), out.begin());
  store_u64le(out.data() + 16, version);
  store_u64le(out.data() + 24, descriptor.offset);
  store_u64le(out.data() + 32, descriptor.size);
  return out;
}

Bytes encode_node_body(const MetadataNode& node) {
  Bytes out;
  if (node.is_leaf()) {
    put_u8(out, kNodeTagLeaf);
    encode_page_ref(out, node.leaf().page_ref);
  } else {
    put_u8(out, kNodeTagInner);
    put_u64le(out, node.inner().left_version);
    put_u64le(out, node.inner().right_version);
  }
  return out;
}

Result<MetadataNode> decode_node_body(const MetadataNodeKey& key, ByteSpan body) {
  ByteReader reader(body);
  auto tag = reader.u8();
  if (!tag.ok()) return tag.status();
  MetadataNode node;
  node.key = key;
  if (tag.value() == kNodeTagInner) {
    auto left = reader.u64le();
    if (!left.ok()) return left.status();
    auto right = reader.u64le();
    if (!right.ok()) return right.status();
    node.body = InnerBody{left.value(), right.value()};
  } else if (tag.value() == kNodeTagLeaf) {
    auto ref = decode_page_ref(reader);
    if (!ref.ok()) return ref.status();
    node.body = LeafBody{std::move(ref).value()};
  } else {
    return Status(Err::truncated_frame, "unknown node body tag");
  }
  if (!reader.done()) return Status(Err::trailing_bytes, "node body has trailing bytes");
  return node;
}

Result<std::pair<NodeDescriptor, NodeDescriptor>> children_of(NodeDescriptor d) {
  if (d.size < 2) return Status(Err::leaf_has_no_children, "leaf node has no children");
  std::uint64_t half = d.size / 2;
  return std::pair{NodeDescriptor{d.offset, half}, NodeDescriptor{d.offset + half, half}};
}

static Status check_segment(NodeDescriptor root, PageInterval segment) {
  if (segment.page_len == 0 || segment.first_page < root.offset ||
      segment.end() > root.interval().end()) {
    return Status(Err::segment_out_of_tree, "segment outside tree root interval");
  }
  return ok_status();
}

static void collect_write_nodes(NodeDescriptor d, PageInterval segment,
                                std::vector<NodeDescriptor>& out) {
  if (!intervals_intersect(d.interval(), segment)) return;
  out.push_back(d);
  if (d.is_leaf()) return;
  auto [left, right] = children_of(d).value();
  collect_write_nodes(left, segment, out);
  collect_write_nodes(right, segment, out);
}

Result<std::vector<NodeDescriptor>> write_node_set(NodeDescriptor root, PageInterval segment) {
  if (Status s = check_segment(root, segment); !s.ok()) return s;
  std::vector<NodeDescriptor> out;
  collect_write_nodes(root, segment, out);
  return out;
}

static void collect_border_children(NodeDescriptor d, PageInterval segment,
                                    std::vector<NodeDescriptor>& out) {
  if (d.is_leaf() || !intervals_intersect(d.interval(), segment)) return;
  auto [left, right] = children_of(d).value();
  for (NodeDescriptor child : {left, right}) {
    if (intervals_intersect(child.interval(), segment)) {
      collect_border_children(child, segment, out);
    } else {
      out.push_back(child);
    }
  }
}

Result<std::vector<NodeDescriptor>> border_children(NodeDescriptor root, PageInterval segment) {
  if (Status s = check_segment(root, segment); !s.ok()) return s;
  std::vector<NodeDescriptor> out;
  collect_border_children(root, segment, out);
  std::sort(out.begin(), out.end(),
            [](const NodeDescriptor& a, const NodeDescriptor& b) { return a.offset < b.offset; });
  return out;
}

Result<std::vector<MetadataNode>> build_write_tree(const BlobId& blob, Version v,
                                                   PageInterval segment,
                                                   std::span<const PageRef> page_refs,
                                                   std::span<const BorderLink> links,
                                                   NodeDescriptor root) {
  if (page_refs.size() != segment.page_len) {
    return Status(Err::arity_mismatch,
                  "expected " + std::to_string(segment.page_len) + " page refs, got " +
                      std::to_string(page_refs.size()));
  }
  auto descriptors = write_node_set(root, segment);
  if (!descriptors.ok()) return descriptors.status();

  auto expected = border_children(root, segment);
  if (!expected.ok()) return expected.status();
  if (links.size() != expected.value().size()) {
    return Status(Err::link_mismatch, "border link count does not match border children");
  }
  std::map<NodeDescriptor, Version> link_versions;
  for (const BorderLink& link : links) link_versions.emplace(link.child_descriptor, link.child_version);
  for (const NodeDescriptor& d : expected.value()) {
    if (link_versions.find(d) == link_versions.end()) {
      return Status(Err::link_mismatch, "missing border link for a border child");
    }
  }

  std::vector<MetadataNode> nodes;
  nodes.reserve(descriptors.value().size());
  for (const NodeDescriptor& d : descriptors.value()) {
    MetadataNode node;
    node.key = MetadataNodeKey{blob, v, d};
    if (d.is_leaf()) {
      node.body = LeafBody{page_refs[d.offset - segment.first_page]};
    } else {
      auto [left, right] = children_of(d).value();
      auto child_version = [&](NodeDescriptor child) {
        if (intervals_intersect(child.interval(), segment)) return v;
        return link_versions.at(child);
      };
      node.body = InnerBody{child_version(left), child_version(right)};
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

Result<std::vector<PageSlot>> plan_lookup(const NodeFetch& fetch, const BlobId& blob,
                                          Version v, PageInterval segment,
                                          NodeDescriptor root) {
  if (Status s = check_segment(root, segment); !s.ok()) return s;

  std::vector<PageSlot> slots(segment.page_len);
  for (std::uint64_t i = 0; i < segment.page_len; ++i) {
    slots[i].page_index = segment.first_page + i;
  }
  if (v == 0) return slots;  // the all-zero string, nothing to fetch

  // (descriptor, version) pairs of the current tree depth.
  std::vector<std::pair<NodeDescriptor, Version>> frontier{{root, v}};
  while (!frontier.empty()) {
    std::vector<MetadataNodeKey> keys;
    keys.reserve(frontier.size());
    for (const auto& [d, ver] : frontier) keys.push_back(MetadataNodeKey{blob, ver, d});

    auto fetched = fetch(keys);
    if (!fetched.ok()) return fetched.status();
    if (fetched.value().size() != keys.size()) {
      return Status(Err::internal, "fetch returned wrong arity");
    }

    std::vector<std::pair<NodeDescriptor, Version>> next;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto& node = fetched.value()[i];
      if (!node.has_value()) {
        return Status(Err::node_missing,
                      "metadata node missing: version " + std::to_string(keys[i].version) +
                          " node (" + std::to_string(keys[i].descriptor.offset) + "," +
                          std::to_string(keys[i].descriptor.size) + ")");
      }
      if (node->key != keys[i] || node->is_leaf() != keys[i].descriptor.is_leaf()) {
        return Status(Err::node_missing, "fetched node does not match requested key");
      }
      NodeDescriptor d = keys[i].descriptor;
      if (node->is_leaf()) {
        slots[d.offset - segment.first_page].ref = node->leaf().page_ref;
        continue;
      }
      auto [left, right] = children_of(d).value();
      const InnerBody& inner = node->inner();
      for (const auto& [child, child_version] :
           {std::pair{left, inner.left_version}, std::pair{right, inner.right_version}}) {
        if (!intervals_intersect(child.interval(), segment)) continue;
        // Version 0 is the zero sentinel: the whole subtree reads as zero
        // bytes and its slots keep their default empty ref.
        if (child_version != 0) next.emplace_back(child, child_version);
      }
    }
    frontier = std::move(next);
  }
  return slots;
}

}  // namespace blobseer
