// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/serialize.hpp"

#include <algorithm>

namespace hornet::protocol {

namespace {
// No length prefix in a valid message can exceed the 4 MB weight bound.
constexpr uint64_t kMaxSize = 0x02000000;
}  // namespace

std::string_view ToString(ParseError error) {
    switch (error) {
        case ParseError::WrongLength: return "WrongLength";
        case ParseError::Truncated: return "Truncated";
        case ParseError::TrailingBytes: return "TrailingBytes";
        case ParseError::NonCanonicalSize: return "NonCanonicalSize";
        case ParseError::OversizedCount: return "OversizedCount";
    }
    return "Unknown";
}

size_t CompactSizeLength(uint64_t value) {
    if (value < 0xfd) return 1;
    if (value <= 0xffff) return 3;
    if (value <= 0xffffffff) return 5;
    return 9;
}

Writer& Writer::U8(uint8_t v) {
    out_.push_back(v);
    return *this;
}

Writer& Writer::U16(uint16_t v) {
    for (int i = 0; i < 2; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    return *this;
}

Writer& Writer::U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    return *this;
}

Writer& Writer::U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    return *this;
}

Writer& Writer::CompactSize(uint64_t v) {
    if (v < 0xfd) return U8(static_cast<uint8_t>(v));
    if (v <= 0xffff) return U8(0xfd).U16(static_cast<uint16_t>(v));
    if (v <= 0xffffffff) return U8(0xfe).U32(static_cast<uint32_t>(v));
    return U8(0xff).U64(v);
}

Writer& Writer::Raw(std::span<const uint8_t> bytes) {
    out_.insert(out_.end(), bytes.begin(), bytes.end());
    return *this;
}

Writer& Writer::VarBytes(std::span<const uint8_t> bytes) { return CompactSize(bytes.size()).Raw(bytes); }

util::Expected<uint8_t, ParseError> Reader::U8() {
    if (Remaining() < 1) return ParseError::Truncated;
    return data_[offset_++];
}

util::Expected<uint16_t, ParseError> Reader::U16() {
    if (Remaining() < 2) return ParseError::Truncated;
    uint16_t v = static_cast<uint16_t>(data_[offset_] | (data_[offset_ + 1] << 8));
    offset_ += 2;
    return v;
}

util::Expected<uint32_t, ParseError> Reader::U32() {
    if (Remaining() < 4) return ParseError::Truncated;
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | data_[offset_ + i];
    offset_ += 4;
    return v;
}

util::Expected<int32_t, ParseError> Reader::I32() {
    const auto v = U32();
    if (!v) return v.error();
    return static_cast<int32_t>(*v);
}

util::Expected<uint64_t, ParseError> Reader::U64() {
    if (Remaining() < 8) return ParseError::Truncated;
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | data_[offset_ + i];
    offset_ += 8;
    return v;
}

util::Expected<int64_t, ParseError> Reader::I64() {
    const auto v = U64();
    if (!v) return v.error();
    return static_cast<int64_t>(*v);
}

util::Expected<uint64_t, ParseError> Reader::CompactSize() {
    const auto tag = U8();
    if (!tag) return tag.error();
    uint64_t value = *tag;
    uint64_t minimum = 0;
    if (*tag == 0xfd) {
        const auto v = U16();
        if (!v) return v.error();
        value = *v;
        minimum = 0xfd;
    } else if (*tag == 0xfe) {
        const auto v = U32();
        if (!v) return v.error();
        value = *v;
        minimum = 0x10000;
    } else if (*tag == 0xff) {
        const auto v = U64();
        if (!v) return v.error();
        value = *v;
        minimum = 0x100000000;
    }
    if (value < minimum) return ParseError::NonCanonicalSize;
    if (value > kMaxSize) return ParseError::OversizedCount;
    return value;
}

util::Expected<Hash256, ParseError> Reader::Hash() {
    if (Remaining() < Hash256::kSize) return ParseError::Truncated;
    const Hash256 h = Hash256::FromBytes(data_.subspan(offset_, Hash256::kSize));
    offset_ += Hash256::kSize;
    return h;
}

util::Expected<std::vector<uint8_t>, ParseError> Reader::Raw(size_t n) {
    if (Remaining() < n) return ParseError::Truncated;
    std::vector<uint8_t> out(data_.begin() + offset_, data_.begin() + offset_ + n);
    offset_ += n;
    return out;
}

util::Expected<std::vector<uint8_t>, ParseError> Reader::VarBytes() {
    const auto n = CompactSize();
    if (!n) return n.error();
    return Raw(*n);
}

}  // namespace hornet::protocol
