// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#include <ethdata/keccak.hpp>

#include <bit>
#include <cstring>

namespace ethdata {

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr unsigned kRotations[24] = {
    1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 2, 14, 27, 41, 56, 8, 25, 43, 62, 18, 39, 61, 20, 44,
};

constexpr unsigned kPiLane[24] = {
    10, 7, 11, 17, 18, 3, 5, 16, 8, 21, 24, 4, 15, 23, 19, 13, 12, 2, 20, 14, 22, 9, 6, 1,
};

void keccak_f1600(uint64_t state[25]) noexcept {
    for (unsigned round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5];
        for (unsigned i = 0; i < 5; ++i)
            c[i] = state[i] ^ state[i + 5] ^ state[i + 10] ^ state[i + 15] ^ state[i + 20];
        for (unsigned i = 0; i < 5; ++i) {
            const uint64_t d = c[(i + 4) % 5] ^ std::rotl(c[(i + 1) % 5], 1);
            for (unsigned j = 0; j < 25; j += 5)
                state[j + i] ^= d;
        }

        // rho and pi
        uint64_t last = state[1];
        for (unsigned i = 0; i < 24; ++i) {
            const unsigned j = kPiLane[i];
            const uint64_t tmp = state[j];
            state[j] = std::rotl(last, static_cast<int>(kRotations[i]));
            last = tmp;
        }

        // chi
        for (unsigned j = 0; j < 25; j += 5) {
            uint64_t row[5];
            for (unsigned i = 0; i < 5; ++i)
                row[i] = state[j + i];
            for (unsigned i = 0; i < 5; ++i)
                state[j + i] = row[i] ^ (~row[(i + 1) % 5] & row[(i + 2) % 5]);
        }

        // iota
        state[0] ^= kRoundConstants[round];
    }
}

constexpr size_t kRate = 136;  // 1600/8 - 2*256/8

// Lanes are little-endian per the Keccak reference.
inline uint64_t load_lane(const uint8_t* p) noexcept {
    uint64_t lane = 0;
    for (unsigned b = 0; b < 8; ++b)
        lane |= uint64_t{p[b]} << (8 * b);
    return lane;
}

inline void absorb_block(uint64_t state[25], const uint8_t* block) noexcept {
    for (unsigned i = 0; i < kRate / 8; ++i)
        state[i] ^= load_lane(block + 8 * i);
    keccak_f1600(state);
}

}  // namespace

Hash256 keccak256(ByteView data) noexcept {
    uint64_t state[25]{};

    while (data.size() >= kRate) {
        absorb_block(state, data.data());
        data.remove_prefix(kRate);
    }

    // final block with multi-rate padding 0x01 .. 0x80
    uint8_t block[kRate]{};
    std::memcpy(block, data.data(), data.size());
    block[data.size()] = 0x01;
    block[kRate - 1] |= 0x80;
    absorb_block(state, block);

    Hash256 out;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned b = 0; b < 8; ++b)
            out[8 * i + b] = static_cast<uint8_t>(state[i] >> (8 * b));
    return out;
}

}  // namespace ethdata
