// Copyright 2026 The ethdata Authors
// SPDX-License-Identifier: Apache-2.0

#include <ethdata/keccak.hpp>
#include <ethdata/kvstore.hpp>

namespace ethdata {

Hash256 MemoryStore::put(ByteView value) {
    const Hash256 key = keccak256(value);
    const std::scoped_lock lock{mutex_};
    entries_.try_emplace(key, value);
    return key;
}

std::optional<Bytes> MemoryStore::get(const Hash256& key) const {
    Bytes value;
    {
        const std::scoped_lock lock{mutex_};
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        value = it->second;
    }
    if (keccak256(value) != key) throw CorruptionError{"kvstore: stored value does not hash to its key"};
    return value;
}

size_t MemoryStore::size() const {
    const std::scoped_lock lock{mutex_};
    return entries_.size();
}

namespace {

constexpr size_t kRecordHeader = 4 + 32;

uint32_t read_be32(const uint8_t* p) noexcept {
    return (uint32_t{p[0]} << 24) | (uint32_t{p[1]} << 16) | (uint32_t{p[2]} << 8) | uint32_t{p[3]};
}

}  // namespace

FileStore::FileStore(const std::filesystem::path& path) : path_{path} {
    if (!std::filesystem::exists(path_)) {
        std::ofstream create{path_, std::ios::binary};
        if (!create) throw StoreError{"kvstore: cannot create " + path_.string()};
    }
    file_.open(path_, std::ios::binary | std::ios::in | std::ios::out);
    if (!file_) throw StoreError{"kvstore: cannot open " + path_.string()};

    const uint64_t file_size = std::filesystem::file_size(path_);
    uint64_t pos = 0;
    while (pos < file_size) {
        if (file_size - pos < kRecordHeader) break;  // truncated tail
        uint8_t header[kRecordHeader];
        file_.seekg(static_cast<std::streamoff>(pos));
        file_.read(reinterpret_cast<char*>(header), kRecordHeader);
        if (!file_) throw StoreError{"kvstore: read failed on " + path_.string()};
        const uint32_t length = read_be32(header);
        if (file_size - pos - kRecordHeader < length) break;  // truncated tail

        Hash256 key;
        std::copy(header + 4, header + kRecordHeader, key.begin());
        Bytes value(length, 0);
        file_.read(reinterpret_cast<char*>(value.data()), length);
        if (!file_) throw StoreError{"kvstore: read failed on " + path_.string()};
        if (keccak256(value) != key)
            throw CorruptionError{"kvstore: record at offset " + std::to_string(pos) +
                                  " does not hash to its key"};

        index_[key] = Location{pos + kRecordHeader, length};
        pos += kRecordHeader + length;
    }
    if (pos < file_size) {
        // Drop the incomplete tail so the next append starts at a record boundary.
        file_.close();
        std::filesystem::resize_file(path_, pos);
        file_.open(path_, std::ios::binary | std::ios::in | std::ios::out);
        if (!file_) throw StoreError{"kvstore: cannot reopen " + path_.string()};
    }
    end_ = pos;
}

Hash256 FileStore::put(ByteView value) {
    const Hash256 key = keccak256(value);
    const std::scoped_lock lock{mutex_};
    if (index_.contains(key)) return key;

    uint8_t header[kRecordHeader];
    const auto length = static_cast<uint32_t>(value.size());
    header[0] = static_cast<uint8_t>(length >> 24);
    header[1] = static_cast<uint8_t>(length >> 16);
    header[2] = static_cast<uint8_t>(length >> 8);
    header[3] = static_cast<uint8_t>(length);
    std::copy(key.begin(), key.end(), header + 4);

    file_.seekp(static_cast<std::streamoff>(end_));
    file_.write(reinterpret_cast<const char*>(header), kRecordHeader);
    file_.write(reinterpret_cast<const char*>(value.data()), static_cast<std::streamsize>(value.size()));
    if (!file_) throw StoreError{"kvstore: write failed on " + path_.string()};

    index_[key] = Location{end_ + kRecordHeader, length};
    end_ += kRecordHeader + value.size();
    return key;
}

Bytes FileStore::read_value(const Location& loc) const {
    Bytes value(loc.length, 0);
    file_.seekg(static_cast<std::streamoff>(loc.offset));
    file_.read(reinterpret_cast<char*>(value.data()), loc.length);
    if (!file_) {
        file_.clear();
        throw StoreError{"kvstore: read failed on " + path_.string()};
    }
    return value;
}

std::optional<Bytes> FileStore::get(const Hash256& key) const {
    Bytes value;
    {
        const std::scoped_lock lock{mutex_};
        const auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        value = read_value(it->second);
    }
    if (keccak256(value) != key) throw CorruptionError{"kvstore: stored value does not hash to its key"};
    return value;
}

void FileStore::flush() {
    const std::scoped_lock lock{mutex_};
    file_.flush();
    if (!file_) throw StoreError{"kvstore: flush failed on " + path_.string()};
}

size_t FileStore::size() const {
    const std::scoped_lock lock{mutex_};
    return index_.size();
}

}  // namespace ethdata
