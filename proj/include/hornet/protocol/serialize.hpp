// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hornet/protocol/hash.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::protocol {

enum class ParseError { WrongLength, Truncated, TrailingBytes, NonCanonicalSize, OversizedCount };

std::string_view ToString(ParseError error);

// Number of bytes CompactSize encoding uses for value: 1, 3, 5 or 9.
size_t CompactSizeLength(uint64_t value);

// Appends little-endian wire encodings to an owned byte buffer.
class Writer {
public:
    Writer& U8(uint8_t v);
    Writer& U16(uint16_t v);
    Writer& U32(uint32_t v);
    Writer& I32(int32_t v) { return U32(static_cast<uint32_t>(v)); }
    Writer& U64(uint64_t v);
    Writer& I64(int64_t v) { return U64(static_cast<uint64_t>(v)); }
    Writer& CompactSize(uint64_t v);
    Writer& Raw(std::span<const uint8_t> bytes);
    Writer& Hash(const Hash256& hash) { return Raw(hash.Bytes()); }
    // CompactSize length prefix followed by the bytes.
    Writer& VarBytes(std::span<const uint8_t> bytes);

    const std::vector<uint8_t>& Data() const { return out_; }
    std::vector<uint8_t> Release() { return std::move(out_); }

private:
    std::vector<uint8_t> out_;
};

// Cursor over a borrowed byte span. Every read reports Truncated on underrun.
class Reader {
public:
    explicit Reader(std::span<const uint8_t> data) : data_(data) {}

    util::Expected<uint8_t, ParseError> U8();
    util::Expected<uint16_t, ParseError> U16();
    util::Expected<uint32_t, ParseError> U32();
    util::Expected<int32_t, ParseError> I32();
    util::Expected<uint64_t, ParseError> U64();
    util::Expected<int64_t, ParseError> I64();
    util::Expected<uint64_t, ParseError> CompactSize();
    util::Expected<Hash256, ParseError> Hash();
    util::Expected<std::vector<uint8_t>, ParseError> Raw(size_t n);
    util::Expected<std::vector<uint8_t>, ParseError> VarBytes();

    uint8_t PeekU8() const { return data_[offset_]; }
    size_t Remaining() const { return data_.size() - offset_; }
    size_t Offset() const { return offset_; }

private:
    std::span<const uint8_t> data_;
    size_t offset_ = 0;
};

}  // namespace hornet::protocol
