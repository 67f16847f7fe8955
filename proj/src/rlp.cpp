// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#include <ethdata/rlp.hpp>

#include <limits>

namespace ethdata::rlp {

namespace {

constexpr size_t kShortLimit = 55;

void append_be(Bytes& out, uint64_t n) {
    const size_t k = num_bytes(n);
    for (size_t i = k; i > 0; --i)
        out.push_back(static_cast<uint8_t>(n >> (8 * (i - 1))));
}

void append_header(Bytes& out, bool list, uint64_t payload_length) {
    const uint8_t base = list ? kEmptyListCode : kEmptyStringCode;
    if (payload_length <= kShortLimit) {
        out.push_back(static_cast<uint8_t>(base + payload_length));
    } else {
        out.push_back(static_cast<uint8_t>(base + kShortLimit + num_bytes(payload_length)));
        append_be(out, payload_length);
    }
}

void encode_to(Bytes& out, const Item& item) {
    if (item.is_string()) {
        const Bytes& s = item.as_string();
        if (s.size() == 1 && s[0] <= 0x7f) {
            out.push_back(s[0]);
        } else {
            append_header(out, false, s.size());
            out.append(s);
        }
        return;
    }
    // Lists nest, so the payload is materialised first to learn its length.
    Bytes payload;
    for (const Item& sub : item.as_list()) {
        const Bytes enc = encode(sub);
        if (payload.size() > std::numeric_limits<uint64_t>::max() - enc.size()) throw ItemTooLarge{};
        payload.append(enc);
    }
    append_header(out, true, payload.size());
    out.append(payload);
}

struct Decoder {
    ByteView input;
    size_t pos = 0;

    [[nodiscard]] size_t remaining() const noexcept { return input.size() - pos; }

    uint8_t take() {
        if (remaining() == 0) throw DecodeError{DecodeErrorKind::truncated, "rlp: input ends inside an item"};
        return input[pos++];
    }

    ByteView take(size_t n) {
        if (remaining() < n) throw DecodeError{DecodeErrorKind::truncated, "rlp: input ends inside an item"};
        const ByteView out = input.substr(pos, n);
        pos += n;
        return out;
    }

    uint64_t take_length(size_t length_bytes) {
        const ByteView raw = take(length_bytes);
        if (raw[0] == 0)
            throw DecodeError{DecodeErrorKind::length_leading_zero, "rlp: length field has a leading zero byte"};
        uint64_t n = 0;
        for (const uint8_t b : raw)
            n = (n << 8) | b;
        if (n <= kShortLimit)
            throw DecodeError{DecodeErrorKind::non_canonical_length_form,
                              "rlp: long form used where the short form fits"};
        return n;
    }

    Item item() {
        const uint8_t prefix = take();
        if (prefix <= 0x7f) return Item::str(Bytes{prefix});
        if (prefix <= 0xb7) {
            const size_t len = prefix - kEmptyStringCode;
            const ByteView payload = take(len);
            if (len == 1 && payload[0] <= 0x7f)
                throw DecodeError{DecodeErrorKind::non_canonical_single_byte,
                                  "rlp: single byte <= 0x7f wrapped in a string header"};
            return Item::str(payload);
        }
        if (prefix <= 0xbf) return Item::str(take(take_length(prefix - 0xb7)));
        const uint64_t payload_length =
            prefix <= 0xf7 ? prefix - kEmptyListCode : take_length(prefix - 0xf7);
        return list_payload(payload_length);
    }

    Item list_payload(uint64_t payload_length) {
        if (remaining() < payload_length)
            throw DecodeError{DecodeErrorKind::truncated, "rlp: input ends inside an item"};
        const size_t end = pos + static_cast<size_t>(payload_length);
        std::vector<Item> items;
        while (pos < end) {
            items.push_back(item());
            if (pos > end)
                throw DecodeError{DecodeErrorKind::truncated, "rlp: element overruns its list payload"};
        }
        return Item::list(std::move(items));
    }
};

}  // namespace

size_t num_bytes(uint64_t n) noexcept {
    size_t k = 1;
    while (n >= 256) {
        n >>= 8;
        ++k;
    }
    return k;
}

Bytes be_compact(uint64_t n) {
    Bytes out;
    if (n != 0) append_be(out, n);
    return out;
}

uint64_t be_compact_value(ByteView b) {
    if (b.size() > 8) throw DecodeError{DecodeErrorKind::truncated, "rlp: scalar wider than 64 bits"};
    if (!b.empty() && b[0] == 0)
        throw DecodeError{DecodeErrorKind::length_leading_zero, "rlp: scalar has a leading zero byte"};
    uint64_t n = 0;
    for (const uint8_t byte : b)
        n = (n << 8) | byte;
    return n;
}

Bytes encode(const Item& item) {
    Bytes out;
    encode_to(out, item);
    return out;
}

Bytes encode(ByteView str) {
    Bytes out;
    if (str.size() == 1 && str[0] <= 0x7f) {
        out.push_back(str[0]);
    } else {
        append_header(out, false, str.size());
        out.append(str);
    }
    return out;
}

Item decode(ByteView data) {
    if (data.empty()) throw DecodeError{DecodeErrorKind::empty_input, "rlp: empty input"};
    Decoder dec{data};
    Item out = dec.item();
    if (dec.remaining() != 0)
        throw DecodeError{DecodeErrorKind::trailing_input, "rlp: trailing bytes after one item"};
    return out;
}

}  // namespace ethdata::rlp
