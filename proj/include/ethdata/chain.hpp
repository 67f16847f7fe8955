// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/secure_trie.hpp>

#include <span>
#include <string>
#include <vector>

namespace ethdata::chain {

/// keccak256 of the empty byte sequence; the code hash of accounts with no code.
inline constexpr Hash256 kEmptyCodeHash =
    hash_from_hex("c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");

/// Flat cost charged per transaction. Execution-level gas schedules are out
/// of scope; a constant keeps the gas accounting fields meaningful.
inline constexpr uint64_t kTxGasCost = 21000;

struct Account {
    uint64_t nonce = 0;
    uint64_t balance = 0;
    Hash256 storage_root = trie::kEmptyRoot;
    Hash256 code_hash = kEmptyCodeHash;

    [[nodiscard]] bool is_externally_owned() const noexcept {
        return storage_root == trie::kEmptyRoot && code_hash == kEmptyCodeHash;
    }

    friend bool operator==(const Account&, const Account&) = default;
};

Bytes encode(const Account& account);
Account decode_account(ByteView data);

enum class TxKind { transfer, creation, message_call };

struct Transaction {
    uint64_t nonce = 0;
    uint64_t gas_price = 0;
    uint64_t gas_limit = 0;
    std::optional<Address> to;  // empty for contract creation
    uint64_t value = 0;
    Bytes init;  // creation byte-code, opaque here
    Bytes data;  // message-call payload, opaque here
    // Signature fields are carried verbatim; recovery is out of scope, so the
    // sender address travels explicitly.
    uint8_t v = 0;
    std::array<uint8_t, 32> r{};
    std::array<uint8_t, 32> s{};
    Address sender{};

    /// Classifies by which optional fields are filled; throws
    /// std::invalid_argument when no single shape matches.
    [[nodiscard]] TxKind kind() const;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

Bytes encode(const Transaction& tx);
Transaction decode_transaction(ByteView data);

struct LogEntry {
    Address address{};
    std::vector<Hash256> topics;  // at most 4
    Bytes data;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

/// 2048-bit bloom filter keyed by keccak256: for the digest's byte pairs
/// (0,1), (2,3), (4,5) the bit (256*d[2i] + d[2i+1]) mod 2048 is set.
class Bloom {
  public:
    void insert(ByteView entry);
    [[nodiscard]] bool contains(ByteView entry) const;
    void merge(const Bloom& other) noexcept;

    [[nodiscard]] const std::array<uint8_t, 256>& data() const noexcept { return bits_; }
    static Bloom from_data(const std::array<uint8_t, 256>& bits);

    friend bool operator==(const Bloom&, const Bloom&) = default;

  private:
    std::array<uint8_t, 256> bits_{};
};

struct Receipt {
    uint64_t cumulative_gas_used = 0;
    std::vector<LogEntry> logs;
    Bloom bloom;
    uint64_t status = 0;  // 1 success, 0 rule violation; other codes pass through decode

    friend bool operator==(const Receipt&, const Receipt&) = default;
};

Bytes encode(const Receipt& receipt);
Receipt decode_receipt(ByteView data);

/// Bloom over one receipt's logs: each log contributes its address, every
/// topic, and every address||topic pair.
Bloom logs_bloom(std::span<const LogEntry> logs);

/// Header bloom: bitwise OR of the receipts' blooms.
Bloom receipts_bloom(std::span<const Receipt> receipts);

struct BlockHeader {
    Hash256 parent_hash{};
    Hash256 ommers_hash{};
    Address beneficiary{};
    Hash256 state_root = trie::kEmptyRoot;
    Hash256 receipts_root = trie::kEmptyRoot;
    Hash256 transactions_root = trie::kEmptyRoot;
    Bloom logs_bloom;
    uint64_t difficulty = 0;
    uint64_t number = 0;
    uint64_t gas_limit = 0;
    uint64_t gas_used = 0;
    Bytes extra_data;  // at most 32 bytes
    Hash256 mix_hash{};
    std::array<uint8_t, 8> nonce{};

    friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

Bytes encode(const BlockHeader& header);
BlockHeader decode_header(ByteView data);
Hash256 header_hash(const BlockHeader& header);

struct Block {
    BlockHeader header;
    std::vector<Transaction> transactions;
    std::vector<BlockHeader> ommers;
};

using State = trie::SecureTrie;

[[nodiscard]] State state_put(const State& state, const Address& address, const Account& account);
[[nodiscard]] std::optional<Account> state_get(const State& state, const Address& address);

/// Root of the plain trie RLP(index) -> RLP(T) over 0-based positions.
Hash256 transactions_root(std::span<const Transaction> txs);
Hash256 receipts_root(std::span<const Receipt> receipts);
Hash256 ommers_hash(std::span<const BlockHeader> ommers);

/// Address of an account created by sender at the given nonce:
/// first 20 bytes of keccak256(sender || RLP(nonce)).
Address contract_address(const Address& sender, uint64_t nonce);

class UnknownSenderError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TxResult {
    State state;
    Receipt receipt;
};

/// Applies one transaction. The sender account must exist (hard error
/// otherwise). Rule violations produce a status-0 receipt: balances stay
/// untouched but the sender nonce still advances and the flat gas cost is
/// still recorded.
TxResult apply_transaction(const State& state, const Transaction& tx, uint64_t gas_accum,
                           uint64_t gas_cost = kTxGasCost);

struct SealResult {
    Block block;
    State state;
    std::vector<Receipt> receipts;
};

/// Applies the transactions in order over pre_state and assembles the block
/// whose header commits to all three resulting tries. Consensus fields
/// (difficulty, mixHash, nonce) stay zero.
SealResult seal_block(const BlockHeader& parent, std::span<const Transaction> txs,
                      const State& pre_state, const Address& beneficiary,
                      std::vector<BlockHeader> ommers = {}, uint64_t gas_cost = kTxGasCost);

/// A header for block number 0 committing to the given state and empty
/// transaction/receipt tries.
BlockHeader make_genesis_header(const State& genesis_state);

struct VerifyFailure {
    size_t block_index = 0;
    std::string reason;
};

/// Replays every block from the genesis state, recomputing roots and
/// linkage. Returns the first failure, or nullopt when the chain is honest.
/// Store corruption encountered during replay is reported at the block being
/// verified, not thrown.
std::optional<VerifyFailure> verify_chain(std::span<const Block> blocks, const State& genesis_state,
                                          const BlockHeader& genesis_header,
                                          uint64_t gas_cost = kTxGasCost);

}  // namespace ethdata::chain
