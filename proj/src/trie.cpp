// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#include <ethdata/keccak.hpp>
#include <ethdata/trie.hpp>

#include <algorithm>
#include <stdexcept>

namespace ethdata::trie {

namespace {

using NibbleSpan = std::span<const uint8_t>;

Nibbles to_vec(NibbleSpan s) {
    return Nibbles{s.begin(), s.end()};
}

size_t common_prefix(NibbleSpan a, NibbleSpan b) noexcept {
    const size_t n = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

bool starts_with(NibbleSpan path, NibbleSpan prefix) noexcept {
    return path.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

Nibbles concat(uint8_t head, const Nibbles& tail) {
    Nibbles out;
    out.reserve(1 + tail.size());
    out.push_back(head);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Nibbles concat(const Nibbles& a, const Nibbles& b) {
    Nibbles out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

rlp::Item ref_item(const ChildRef& ref) {
    if (ref.empty()) return rlp::Item::str(Bytes{});
    if (ref.is_hash()) return rlp::Item::str(view(ref.hash()));
    return encode_node(ref.inline_node());
}

ChildRef decode_ref(const rlp::Item& item, bool may_be_empty) {
    if (item.is_string()) {
        const Bytes& s = item.as_string();
        if (s.empty()) {
            if (!may_be_empty) throw CorruptionError{"trie: missing child reference"};
            return ChildRef{};
        }
        if (s.size() != 32) throw CorruptionError{"trie: hash reference is not 32 bytes"};
        Hash256 h;
        std::copy(s.begin(), s.end(), h.begin());
        return ChildRef::by_hash(h);
    }
    if (rlp::encode(item).size() >= 32)
        throw CorruptionError{"trie: embedded node encoding is 32 bytes or longer"};
    return ChildRef::inlined(decode_node(item));
}

}  // namespace

ChildRef ChildRef::inlined(Node node) {
    return ChildRef{std::make_shared<const Node>(std::move(node))};
}

int BranchNode::child_count() const noexcept {
    int n = 0;
    for (const ChildRef& c : children)
        if (!c.empty()) ++n;
    return n;
}

int BranchNode::sole_child_index() const noexcept {
    int found = -1;
    for (int i = 0; i < 16; ++i) {
        if (children[static_cast<size_t>(i)].empty()) continue;
        if (found >= 0) return -1;
        found = i;
    }
    return found;
}

rlp::Item encode_node(const Node& node) {
    return std::visit(
        [](const auto& n) -> rlp::Item {
            using T = std::decay_t<decltype(n)>;
            std::vector<rlp::Item> items;
            if constexpr (std::is_same_v<T, LeafNode>) {
                items.push_back(rlp::Item::str(hp::encode(n.path, true)));
                items.push_back(rlp::Item::str(ByteView{n.value}));
            } else if constexpr (std::is_same_v<T, ExtensionNode>) {
                items.push_back(rlp::Item::str(hp::encode(n.path, false)));
                items.push_back(ref_item(n.child));
            } else {
                items.reserve(17);
                for (const ChildRef& c : n.children)
                    items.push_back(ref_item(c));
                items.push_back(rlp::Item::str(ByteView{n.value}));
            }
            return rlp::Item::list(std::move(items));
        },
        node.v);
}

Node decode_node(const rlp::Item& item) {
    if (!item.is_list()) throw CorruptionError{"trie: node encoding is not a list"};
    const std::vector<rlp::Item>& items = item.as_list();

    if (items.size() == 17) {
        BranchNode branch;
        for (size_t i = 0; i < 16; ++i)
            branch.children[i] = decode_ref(items[i], /*may_be_empty=*/true);
        if (!items[16].is_string()) throw CorruptionError{"trie: branch value slot holds a list"};
        branch.value = items[16].as_string();
        const int occupied = branch.child_count() + (branch.value.empty() ? 0 : 1);
        if (occupied < 2) throw CorruptionError{"trie: under-occupied branch node"};
        return Node{std::move(branch)};
    }

    if (items.size() != 2) throw CorruptionError{"trie: node is neither a 2-item nor a 17-item list"};
    if (!items[0].is_string()) throw CorruptionError{"trie: node path slot holds a list"};
    hp::Decoded decoded;
    try {
        decoded = hp::decode(ByteView{items[0].as_string()});
    } catch (const std::invalid_argument& e) {
        throw CorruptionError{std::string{"trie: "} + e.what()};
    }

    if (decoded.is_leaf) {
        if (!items[1].is_string()) throw CorruptionError{"trie: leaf value slot holds a list"};
        if (items[1].as_string().empty()) throw CorruptionError{"trie: leaf with empty value"};
        return Node{LeafNode{std::move(decoded.path), items[1].as_string()}};
    }

    if (decoded.path.empty()) throw CorruptionError{"trie: extension with empty path"};
    ChildRef child = decode_ref(items[1], /*may_be_empty=*/false);
    if (child.is_inline() && !std::holds_alternative<BranchNode>(child.inline_node().v))
        throw CorruptionError{"trie: extension child is not a branch"};
    return Node{ExtensionNode{std::move(decoded.path), std::move(child)}};
}

ChildRef make_ref(Node node, NodeStore& store) {
    const Bytes encoded = rlp::encode(encode_node(node));
    if (encoded.size() < 32) return ChildRef::inlined(std::move(node));
    return ChildRef::by_hash(store.put(encoded));
}

Node resolve(const ChildRef& ref, const NodeStore& store) {
    if (ref.is_inline()) return ref.inline_node();
    if (ref.empty()) throw std::logic_error{"trie: resolving an empty child reference"};
    const std::optional<Bytes> encoded = store.get(ref.hash());
    if (!encoded) throw CorruptionError{"trie: dangling node reference " + to_hex(ref.hash())};
    if (keccak256(*encoded) != ref.hash())
        throw CorruptionError{"trie: node bytes do not hash to their reference"};
    return decode_node(rlp::decode(*encoded));
}

namespace {

/// Per-operation context carrying the store through the recursion.
struct Ops {
    NodeStore& store;

    Node insert(const Node& node, NibbleSpan path, ByteView value) {
        return std::visit([&](const auto& n) { return insert_into(n, path, value); }, node.v);
    }

    Node insert_into(const LeafNode& leaf, NibbleSpan path, ByteView value) {
        const size_t cp = common_prefix(leaf.path, path);
        if (cp == leaf.path.size() && cp == path.size())
            return Node{LeafNode{leaf.path, Bytes{value}}};

        BranchNode branch;
        if (cp == leaf.path.size())
            branch.value = leaf.value;
        else
            branch.children[leaf.path[cp]] =
                make_ref(Node{LeafNode{to_vec(NibbleSpan{leaf.path}.subspan(cp + 1)), leaf.value}}, store);
        place_new(branch, path, cp, value);
        return wrap_extension(path.first(cp), std::move(branch));
    }

    Node insert_into(const ExtensionNode& ext, NibbleSpan path, ByteView value) {
        const size_t cp = common_prefix(ext.path, path);
        if (cp == ext.path.size()) {
            Node child = insert(resolve(ext.child, store), path.subspan(cp), value);
            return Node{ExtensionNode{ext.path, make_ref(std::move(child), store)}};
        }

        BranchNode branch;
        if (cp + 1 == ext.path.size())
            branch.children[ext.path[cp]] = ext.child;
        else
            branch.children[ext.path[cp]] = make_ref(
                Node{ExtensionNode{to_vec(NibbleSpan{ext.path}.subspan(cp + 1)), ext.child}}, store);
        place_new(branch, path, cp, value);
        return wrap_extension(path.first(cp), std::move(branch));
    }

    Node insert_into(const BranchNode& br, NibbleSpan path, ByteView value) {
        BranchNode branch = br;
        if (path.empty()) {
            branch.value = Bytes{value};
            return Node{std::move(branch)};
        }
        ChildRef& slot = branch.children[path[0]];
        if (slot.empty())
            slot = make_ref(Node{LeafNode{to_vec(path.subspan(1)), Bytes{value}}}, store);
        else
            slot = make_ref(insert(resolve(slot, store), path.subspan(1), value), store);
        return Node{std::move(branch)};
    }

    void place_new(BranchNode& branch, NibbleSpan path, size_t cp, ByteView value) {
        if (cp == path.size())
            branch.value = Bytes{value};
        else
            branch.children[path[cp]] =
                make_ref(Node{LeafNode{to_vec(path.subspan(cp + 1)), Bytes{value}}}, store);
    }

    Node wrap_extension(NibbleSpan common, BranchNode branch) {
        if (common.empty()) return Node{std::move(branch)};
        return Node{ExtensionNode{to_vec(common), make_ref(Node{std::move(branch)}, store)}};
    }

    struct Removed {
        bool changed = false;
        std::optional<Node> node;  // nullopt when the subtree became empty
    };

    Removed remove(const Node& node, NibbleSpan path) {
        return std::visit([&](const auto& n) { return remove_from(n, path); }, node.v);
    }

    Removed remove_from(const LeafNode& leaf, NibbleSpan path) {
        if (NibbleSpan{leaf.path}.size() == path.size() && starts_with(path, leaf.path))
            return {true, std::nullopt};
        return {};
    }

    Removed remove_from(const ExtensionNode& ext, NibbleSpan path) {
        if (!starts_with(path, ext.path)) return {};
        Removed inner = remove(resolve(ext.child, store), path.subspan(ext.path.size()));
        if (!inner.changed) return {};
        if (!inner.node) return {true, std::nullopt};

        // Re-absorb the shortened child to keep compression maximal.
        return {true, std::visit(
                          [&](auto&& child) -> Node {
                              using T = std::decay_t<decltype(child)>;
                              if constexpr (std::is_same_v<T, LeafNode>)
                                  return Node{LeafNode{concat(ext.path, child.path), std::move(child.value)}};
                              else if constexpr (std::is_same_v<T, ExtensionNode>)
                                  return Node{ExtensionNode{concat(ext.path, child.path), std::move(child.child)}};
                              else
                                  return Node{ExtensionNode{ext.path, make_ref(Node{std::move(child)}, store)}};
                          },
                          std::move(inner.node->v))};
    }

    Removed remove_from(const BranchNode& br, NibbleSpan path) {
        BranchNode branch = br;
        if (path.empty()) {
            if (branch.value.empty()) return {};
            branch.value.clear();
        } else {
            ChildRef& slot = branch.children[path[0]];
            if (slot.empty()) return {};
            Removed inner = remove(resolve(slot, store), path.subspan(1));
            if (!inner.changed) return {};
            slot = inner.node ? make_ref(std::move(*inner.node), store) : ChildRef{};
        }
        return {true, collapse(std::move(branch))};
    }

    /// Re-normalizes a branch after a removal underneath it.
    std::optional<Node> collapse(BranchNode branch) {
        const int count = branch.child_count();
        if (count == 0 && branch.value.empty()) return std::nullopt;
        if (count == 0) return Node{LeafNode{{}, std::move(branch.value)}};
        if (count > 1 || !branch.value.empty()) return Node{std::move(branch)};

        const int idx = branch.sole_child_index();
        const auto nibble = static_cast<uint8_t>(idx);
        const ChildRef& child_ref = branch.children[static_cast<size_t>(idx)];
        Node child = resolve(child_ref, store);
        return std::visit(
            [&](auto&& c) -> Node {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, LeafNode>)
                    return Node{LeafNode{concat(nibble, c.path), std::move(c.value)}};
                else if constexpr (std::is_same_v<T, ExtensionNode>)
                    return Node{ExtensionNode{concat(nibble, c.path), std::move(c.child)}};
                else
                    return Node{ExtensionNode{Nibbles{nibble}, child_ref}};
            },
            std::move(child.v));
    }
};

}  // namespace

Trie Trie::insert(ByteView key, ByteView value) const {
    if (value.empty()) throw std::invalid_argument{"trie: the empty value is reserved to mean absence"};
    const Nibbles path = hp::to_nibbles(key);
    Ops ops{*store_};
    Node new_root = empty() ? Node{LeafNode{path, Bytes{value}}}
                            : ops.insert(resolve(ChildRef::by_hash(root_), *store_), path, value);
    return Trie{store_, store_->put(rlp::encode(encode_node(new_root)))};
}

std::optional<Bytes> Trie::get(ByteView key) const {
    if (empty()) return std::nullopt;
    Node node = resolve(ChildRef::by_hash(root_), *store_);
    const Nibbles nibbles = hp::to_nibbles(key);
    NibbleSpan remaining{nibbles};

    for (;;) {
        if (const auto* leaf = std::get_if<LeafNode>(&node.v)) {
            if (remaining.size() == leaf->path.size() && starts_with(remaining, leaf->path))
                return leaf->value;
            return std::nullopt;
        }
        if (const auto* ext = std::get_if<ExtensionNode>(&node.v)) {
            if (!starts_with(remaining, ext->path)) return std::nullopt;
            remaining = remaining.subspan(ext->path.size());
            node = resolve(ext->child, *store_);
            continue;
        }
        const auto& branch = std::get<BranchNode>(node.v);
        if (remaining.empty()) {
            if (branch.value.empty()) return std::nullopt;
            return branch.value;
        }
        const ChildRef& child = branch.children[remaining[0]];
        if (child.empty()) return std::nullopt;
        remaining = remaining.subspan(1);
        node = resolve(child, *store_);
    }
}

Trie Trie::erase(ByteView key) const {
    if (empty()) return *this;
    const Nibbles path = hp::to_nibbles(key);
    Ops ops{*store_};
    Ops::Removed result = ops.remove(resolve(ChildRef::by_hash(root_), *store_), path);
    if (!result.changed) return *this;
    if (!result.node) return Trie{store_};
    return Trie{store_, store_->put(rlp::encode(encode_node(*result.node)))};
}

std::vector<Bytes> Trie::prove(ByteView key) const {
    std::vector<Bytes> proof;
    if (empty()) return proof;

    const Nibbles nibbles = hp::to_nibbles(key);
    NibbleSpan remaining{nibbles};
    Hash256 expected = root_;

    for (;;) {
        const std::optional<Bytes> encoded = store_->get(expected);
        if (!encoded) throw CorruptionError{"trie: dangling node reference " + to_hex(expected)};
        proof.push_back(*encoded);
        Node holder = decode_node(rlp::decode(*encoded));

        // Walk within this element, stepping through inline children in place.
        const Node* node = &holder;
        for (;;) {
            if (const auto* leaf = std::get_if<LeafNode>(&node->v)) return proof;
            if (const auto* ext = std::get_if<ExtensionNode>(&node->v)) {
                if (!starts_with(remaining, ext->path)) return proof;  // divergence proven here
                remaining = remaining.subspan(ext->path.size());
                if (ext->child.is_hash()) {
                    expected = ext->child.hash();
                    break;
                }
                node = &ext->child.inline_node();
                continue;
            }
            const auto& branch = std::get<BranchNode>(node->v);
            if (remaining.empty()) return proof;
            const ChildRef& child = branch.children[remaining[0]];
            if (child.empty()) return proof;  // absence proven here
            remaining = remaining.subspan(1);
            if (child.is_hash()) {
                expected = child.hash();
                break;
            }
            node = &child.inline_node();
        }
    }
}

ProofResult verify_proof(const Hash256& root, ByteView key, std::span<const Bytes> proof) {
    const auto conclude = [&](size_t used, ProofResult result) {
        if (used != proof.size()) return ProofResult{ProofOutcome::invalid, {}};
        return result;
    };

    if (root == kEmptyRoot) return conclude(0, {ProofOutcome::absent, {}});

    const Nibbles nibbles = hp::to_nibbles(key);
    NibbleSpan remaining{nibbles};
    Hash256 expected = root;
    size_t used = 0;

    for (;;) {
        if (used >= proof.size()) return {ProofOutcome::invalid, {}};
        const Bytes& encoded = proof[used++];
        if (keccak256(encoded) != expected) return {ProofOutcome::invalid, {}};

        Node holder;
        try {
            holder = decode_node(rlp::decode(encoded));
        } catch (const rlp::DecodeError&) {
            return {ProofOutcome::invalid, {}};
        } catch (const CorruptionError&) {
            return {ProofOutcome::invalid, {}};
        }

        const Node* node = &holder;
        bool descend = false;
        while (!descend) {
            if (const auto* leaf = std::get_if<LeafNode>(&node->v)) {
                if (remaining.size() == leaf->path.size() && starts_with(remaining, leaf->path))
                    return conclude(used, {ProofOutcome::present, leaf->value});
                return conclude(used, {ProofOutcome::absent, {}});
            }
            if (const auto* ext = std::get_if<ExtensionNode>(&node->v)) {
                if (!starts_with(remaining, ext->path))
                    return conclude(used, {ProofOutcome::absent, {}});
                remaining = remaining.subspan(ext->path.size());
                if (ext->child.is_hash()) {
                    expected = ext->child.hash();
                    descend = true;
                } else {
                    node = &ext->child.inline_node();
                }
                continue;
            }
            const auto& branch = std::get<BranchNode>(node->v);
            if (remaining.empty()) {
                if (branch.value.empty()) return conclude(used, {ProofOutcome::absent, {}});
                return conclude(used, {ProofOutcome::present, branch.value});
            }
            const ChildRef& child = branch.children[remaining[0]];
            if (child.empty()) return conclude(used, {ProofOutcome::absent, {}});
            remaining = remaining.subspan(1);
            if (child.is_hash()) {
                expected = child.hash();
                descend = true;
            } else {
                node = &child.inline_node();
            }
        }
    }
}

}  // namespace ethdata::trie
