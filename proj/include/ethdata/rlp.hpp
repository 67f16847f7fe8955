// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/bytes.hpp>

#include <stdexcept>
#include <variant>
#include <vector>

namespace ethdata::rlp {

inline constexpr uint8_t kEmptyStringCode = 0x80;
inline constexpr uint8_t kEmptyListCode = 0xc0;

/// A value in the RLP domain: a byte string, or an ordered list of items.
class Item {
  public:
    Item() noexcept : value_{Bytes{}} {}

    static Item str(Bytes b) { return Item{std::move(b)}; }
    static Item str(ByteView b) { return Item{Bytes{b}}; }
    static Item str(std::string_view s) { return Item{to_bytes(s)}; }
    static Item list(std::vector<Item> items) { return Item{std::move(items)}; }

    [[nodiscard]] bool is_string() const noexcept { return std::holds_alternative<Bytes>(value_); }
    [[nodiscard]] bool is_list() const noexcept { return !is_string(); }

    [[nodiscard]] const Bytes& as_string() const { return std::get<Bytes>(value_); }
    [[nodiscard]] const std::vector<Item>& as_list() const { return std::get<std::vector<Item>>(value_); }

    friend bool operator==(const Item&, const Item&) = default;

  private:
    explicit Item(Bytes b) noexcept : value_{std::move(b)} {}
    explicit Item(std::vector<Item> items) noexcept : value_{std::move(items)} {}

    std::variant<Bytes, std::vector<Item>> value_;
};

enum class DecodeErrorKind {
    empty_input,
    truncated,
    trailing_input,
    non_canonical_single_byte,  // e.g. 0x81 0x05 where 0x05 encodes as itself
    non_canonical_length_form,  // long form used where the short form fits
    length_leading_zero,
};

class DecodeError : public std::runtime_error {
  public:
    DecodeError(DecodeErrorKind kind, const char* what) : std::runtime_error{what}, kind_{kind} {}
    [[nodiscard]] DecodeErrorKind kind() const noexcept { return kind_; }

  private:
    DecodeErrorKind kind_;
};

class ItemTooLarge : public std::length_error {
  public:
    ItemTooLarge() : std::length_error{"rlp item exceeds the 2^64 encoding bound"} {}
};

/// Smallest k >= 1 such that n < 256^k, i.e. the byte count of a length field.
size_t num_bytes(uint64_t n) noexcept;

/// Minimal big-endian representation of a scalar; zero maps to the empty string.
Bytes be_compact(uint64_t n);

/// Inverse of be_compact. Rejects leading zero bytes and values wider than 64 bits.
uint64_t be_compact_value(ByteView b);

inline Item uint_item(uint64_t n) {
    return Item::str(be_compact(n));
}

Bytes encode(const Item& item);
Bytes encode(ByteView str);

/// Strict decoder: accepts exactly the canonical encoding of one item and
/// consumes all input. Throws DecodeError otherwise.
Item decode(ByteView data);

}  // namespace ethdata::rlp
