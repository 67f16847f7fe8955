// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/bytes.hpp>

#include <vector>

namespace ethdata::hp {

/// A trie path: a sequence of 4-bit values, one hex character each.
using Nibbles = std::vector<uint8_t>;

/// Packs a nibble path into bytes. The first nibble carries the node type
/// (bit 0x2: leaf) and path-length parity (bit 0x1: odd); even paths get a
/// zero padding nibble after it.
Bytes encode(const Nibbles& path, bool is_leaf);

struct Decoded {
    Nibbles path;
    bool is_leaf = false;

    friend bool operator==(const Decoded&, const Decoded&) = default;
};

/// Exact inverse of encode. Rejects a flag nibble above 3 and a nonzero
/// padding nibble in even mode.
Decoded decode(ByteView data);

/// Expands each key byte b into the nibble pair [b >> 4, b & 0xf].
Nibbles to_nibbles(ByteView key);

}  // namespace ethdata::hp
