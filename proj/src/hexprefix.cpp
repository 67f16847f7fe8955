// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#include <ethdata/hexprefix.hpp>

#include <stdexcept>

namespace ethdata::hp {

Bytes encode(const Nibbles& path, bool is_leaf) {
    for (const uint8_t n : path)
        if (n > 0x0f) throw std::invalid_argument{"hp: nibble out of range"};

    const bool odd = path.size() % 2 != 0;
    uint8_t flag = is_leaf ? 0x2 : 0x0;
    if (odd) flag |= 0x1;

    Bytes out;
    out.reserve(1 + path.size() / 2);
    size_t i = 0;
    if (odd) {
        out.push_back(static_cast<uint8_t>((flag << 4) | path[0]));
        i = 1;
    } else {
        out.push_back(static_cast<uint8_t>(flag << 4));  // second nibble is the zero padding
    }
    for (; i < path.size(); i += 2)
        out.push_back(static_cast<uint8_t>((path[i] << 4) | path[i + 1]));
    return out;
}

Decoded decode(ByteView data) {
    if (data.empty()) throw std::invalid_argument{"hp: empty input"};
    const uint8_t flag = data[0] >> 4;
    if (flag > 0x3) throw std::invalid_argument{"hp: flag nibble out of range"};
    const bool is_leaf = (flag & 0x2) != 0;
    const bool odd = (flag & 0x1) != 0;

    Nibbles path;
    path.reserve(2 * data.size());
    if (odd) {
        path.push_back(data[0] & 0x0f);
    } else if ((data[0] & 0x0f) != 0) {
        throw std::invalid_argument{"hp: nonzero padding nibble"};
    }
    for (size_t i = 1; i < data.size(); ++i) {
        path.push_back(data[i] >> 4);
        path.push_back(data[i] & 0x0f);
    }
    return {std::move(path), is_leaf};
}

Nibbles to_nibbles(ByteView key) {
    Nibbles out;
    out.reserve(2 * key.size());
    for (const uint8_t b : key) {
        out.push_back(b >> 4);
        out.push_back(b & 0x0f);
    }
    return out;
}

}  // namespace ethdata::hp
