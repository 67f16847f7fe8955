// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/hexprefix.hpp>
#include <ethdata/kvstore.hpp>
#include <ethdata/rlp.hpp>

#include <memory>
#include <span>
#include <variant>

namespace ethdata::trie {

using hp::Nibbles;

/// keccak256(rlp("")), the root digest of a trie with no bindings.
inline constexpr Hash256 kEmptyRoot =
    hash_from_hex("56e81f171bcc55a6ff8345e692c0f86e5b48e01b996cadc001622fb5e363b421");

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// A parent's link to a child: absent, by digest, or embedded when the
/// child's encoding is shorter than 32 bytes.
class ChildRef {
  public:
    ChildRef() noexcept = default;

    static ChildRef by_hash(const Hash256& h) { return ChildRef{h}; }
    static ChildRef inlined(Node node);

    [[nodiscard]] bool empty() const noexcept { return std::holds_alternative<std::monostate>(target_); }
    [[nodiscard]] bool is_hash() const noexcept { return std::holds_alternative<Hash256>(target_); }
    [[nodiscard]] bool is_inline() const noexcept { return std::holds_alternative<NodePtr>(target_); }

    [[nodiscard]] const Hash256& hash() const { return std::get<Hash256>(target_); }
    [[nodiscard]] const Node& inline_node() const { return *std::get<NodePtr>(target_); }

  private:
    explicit ChildRef(const Hash256& h) : target_{h} {}
    explicit ChildRef(NodePtr n) : target_{std::move(n)} {}

    std::variant<std::monostate, Hash256, NodePtr> target_;
};

struct LeafNode {
    Nibbles path;  // may be empty
    Bytes value;   // never empty
};

struct ExtensionNode {
    Nibbles path;  // never empty
    ChildRef child;
};

struct BranchNode {
    std::array<ChildRef, 16> children;
    Bytes value;  // empty when the branch does not terminate a key

    [[nodiscard]] int child_count() const noexcept;
    [[nodiscard]] int sole_child_index() const noexcept;  // -1 unless exactly one child
};

struct Node {
    std::variant<LeafNode, ExtensionNode, BranchNode> v;
};

/// Structured node -> RLP item, with hash refs as 32-byte strings and inline
/// children as nested lists.
rlp::Item encode_node(const Node& node);

/// Inverse of encode_node. Throws CorruptionError on a malformed node shape.
Node decode_node(const rlp::Item& item);

/// Inline the node if its encoding is under 32 bytes, otherwise persist it
/// and refer to it by digest.
ChildRef make_ref(Node node, NodeStore& store);

/// Loads the node a ref points to. Verifies that fetched bytes hash to the
/// requested digest, so a lying store is detected here.
Node resolve(const ChildRef& ref, const NodeStore& store);

/// A Merkle Patricia Trie version: a root digest plus the node store it
/// lives in. Updates are copy-on-write and return a new value; earlier
/// versions stay readable through the same store.
class Trie {
  public:
    explicit Trie(std::shared_ptr<NodeStore> store) : store_{std::move(store)}, root_{kEmptyRoot} {}
    Trie(std::shared_ptr<NodeStore> store, const Hash256& root) : store_{std::move(store)}, root_{root} {}

    [[nodiscard]] const Hash256& root_hash() const noexcept { return root_; }
    [[nodiscard]] bool empty() const noexcept { return root_ == kEmptyRoot; }
    [[nodiscard]] const std::shared_ptr<NodeStore>& store() const noexcept { return store_; }

    /// Binds key -> value. The value must be non-empty; the empty value is
    /// reserved to mean absence.
    [[nodiscard]] Trie insert(ByteView key, ByteView value) const;

    [[nodiscard]] std::optional<Bytes> get(ByteView key) const;

    /// Removes the binding if present; a no-op otherwise.
    [[nodiscard]] Trie erase(ByteView key) const;

    /// The encodings of the store-resolved nodes on the path from the root to
    /// the node that decides the key (its leaf or its divergence point).
    /// Inline children travel embedded in their parents.
    [[nodiscard]] std::vector<Bytes> prove(ByteView key) const;

  private:
    std::shared_ptr<NodeStore> store_;
    Hash256 root_;
};

enum class ProofOutcome { present, absent, invalid };

struct ProofResult {
    ProofOutcome outcome = ProofOutcome::invalid;
    Bytes value;  // set iff present

    friend bool operator==(const ProofResult&, const ProofResult&) = default;
};

/// Checks a proof against a root digest alone, with no store access.
/// Never returns present unless the value is actually bound under the root.
ProofResult verify_proof(const Hash256& root, ByteView key, std::span<const Bytes> proof);

}  // namespace ethdata::trie
