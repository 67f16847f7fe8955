// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ethdata/bytes.hpp>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace ethdata {

class StoreError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A stored value no longer hashes to its key.
class CorruptionError : public StoreError {
  public:
    using StoreError::StoreError;
};

/// Content-addressed node database: every value is stored under its own
/// keccak256 digest. Writes are idempotent; nothing is ever deleted.
class NodeStore {
  public:
    virtual ~NodeStore() = default;

    /// Persists value under keccak256(value) and returns that key.
    virtual Hash256 put(ByteView value) = 0;

    /// Returns the value previously put under key, or nullopt.
    /// Throws CorruptionError if the stored bytes no longer match the key.
    virtual std::optional<Bytes> get(const Hash256& key) const = 0;

    virtual void flush() {}

    virtual size_t size() const = 0;
};

class MemoryStore final : public NodeStore {
  public:
    Hash256 put(ByteView value) override;
    std::optional<Bytes> get(const Hash256& key) const override;
    size_t size() const override;

  private:
    mutable std::mutex mutex_;
    std::unordered_map<Hash256, Bytes, Hash256Hasher> entries_;
};

/// File backend: an append-only log of records
///   [4-byte big-endian value length][32-byte key][value bytes]
/// with an in-memory offset index rebuilt on open. A truncated final record
/// is dropped on open; any complete record whose value fails the hash check
/// makes the open fail.
class FileStore final : public NodeStore {
  public:
    explicit FileStore(const std::filesystem::path& path);

    Hash256 put(ByteView value) override;
    std::optional<Bytes> get(const Hash256& key) const override;
    void flush() override;
    size_t size() const override;

  private:
    struct Location {
        uint64_t offset;  // of the value bytes
        uint32_t length;
    };

    Bytes read_value(const Location& loc) const;

    std::filesystem::path path_;
    mutable std::fstream file_;
    mutable std::mutex mutex_;
    std::unordered_map<Hash256, Location, Hash256Hasher> index_;
    uint64_t end_ = 0;  // append position
};

}  // namespace ethdata
