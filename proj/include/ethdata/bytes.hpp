// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ethdata {

using Bytes = std::basic_string<uint8_t>;
using ByteView = std::basic_string_view<uint8_t>;

using Hash256 = std::array<uint8_t, 32>;
using Address = std::array<uint8_t, 20>;

inline ByteView view(const Hash256& h) noexcept {
    return {h.data(), h.size()};
}

inline ByteView view(const Address& a) noexcept {
    return {a.data(), a.size()};
}

/// Reinterprets text as raw bytes.
inline ByteView string_view_to_byte_view(std::string_view s) noexcept {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
    return Bytes{string_view_to_byte_view(s)};
}

std::string to_hex(ByteView data, bool with_prefix = false);

inline std::string to_hex(const Hash256& h, bool with_prefix = false) {
    return to_hex(view(h), with_prefix);
}

/// Decodes a hex string, with or without the 0x prefix.
/// Returns nullopt on odd length or a non-hex character.
std::optional<Bytes> from_hex(std::string_view hex);

/// Compile-time hex-to-hash conversion for well-known digests.
constexpr Hash256 hash_from_hex(std::string_view hex) {
    constexpr auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw "invalid hex digit";
    };
    if (hex.size() != 64) throw "hash literal must be 64 hex digits";
    Hash256 out{};
    for (size_t i = 0; i < 32; ++i)
        out[i] = static_cast<uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return out;
}

struct Hash256Hasher {
    size_t operator()(const Hash256& h) const noexcept {
        size_t v = 0;
        for (size_t i = 0; i < sizeof(size_t); ++i)
            v = (v << 8) | h[i];
        return v;
    }
};

}  // namespace ethdata
