// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/keccak.hpp>
#include <ethdata/trie.hpp>

namespace ethdata::trie {

/// Trie wrapper that hashes every key with keccak256 before access, so all
/// inner paths are exactly 64 nibbles and key distribution is uniform.
/// Original keys are not recoverable; callers must keep them.
class SecureTrie {
  public:
    explicit SecureTrie(std::shared_ptr<NodeStore> store) : inner_{std::move(store)} {}
    SecureTrie(std::shared_ptr<NodeStore> store, const Hash256& root) : inner_{std::move(store), root} {}

    [[nodiscard]] const Hash256& root_hash() const noexcept { return inner_.root_hash(); }
    [[nodiscard]] bool empty() const noexcept { return inner_.empty(); }
    [[nodiscard]] const Trie& inner() const noexcept { return inner_; }

    [[nodiscard]] SecureTrie insert(ByteView key, ByteView value) const {
        return SecureTrie{inner_.insert(hashed(key), value)};
    }

    [[nodiscard]] std::optional<Bytes> get(ByteView key) const { return inner_.get(hashed(key)); }

    [[nodiscard]] SecureTrie erase(ByteView key) const { return SecureTrie{inner_.erase(hashed(key))}; }

    [[nodiscard]] std::vector<Bytes> prove(ByteView key) const { return inner_.prove(hashed(key)); }

  private:
    explicit SecureTrie(Trie inner) : inner_{std::move(inner)} {}

    static Bytes hashed(ByteView key) {
        const Hash256 digest = keccak256(key);
        return Bytes{view(digest)};
    }

    Trie inner_;
};

}  // namespace ethdata::trie
