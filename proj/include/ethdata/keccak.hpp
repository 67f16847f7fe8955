// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/bytes.hpp>

namespace ethdata {

/// Keccak-256 with the original multi-rate padding (domain byte 0x01),
/// as used by Ethereum. Not the same function as NIST SHA3-256.
Hash256 keccak256(ByteView data) noexcept;

inline Hash256 keccak256(std::string_view s) noexcept {
    return keccak256(string_view_to_byte_view(s));
}

}  // namespace ethdata
