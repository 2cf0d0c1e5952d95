// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/block_header.hpp"

#include <algorithm>

#include "hornet/protocol/hashing.hpp"

namespace hornet::protocol {

namespace {
void PutU32(uint8_t* out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out[i] = static_cast<uint8_t>(v >> (8 * i));
}

uint32_t GetU32(const uint8_t* in) {
    return static_cast<uint32_t>(in[0]) | (static_cast<uint32_t>(in[1]) << 8) |
           (static_cast<uint32_t>(in[2]) << 16) | (static_cast<uint32_t>(in[3]) << 24);
}
}  // namespace

std::array<uint8_t, BlockHeader::kSerializedSize> SerializeHeader(const BlockHeader& header) {
    std::array<uint8_t, BlockHeader::kSerializedSize> out;
    PutU32(&out[0], static_cast<uint32_t>(header.version));
    std::copy(header.previous_block_hash.Bytes().begin(), header.previous_block_hash.Bytes().end(), &out[4]);
    std::copy(header.merkle_root.Bytes().begin(), header.merkle_root.Bytes().end(), &out[36]);
    PutU32(&out[68], header.timestamp);
    PutU32(&out[72], header.bits.bits);
    PutU32(&out[76], header.nonce);
    return out;
}

util::Expected<BlockHeader, ParseError> ParseHeader(std::span<const uint8_t> bytes) {
    if (bytes.size() != BlockHeader::kSerializedSize) return ParseError::WrongLength;
    BlockHeader header;
    header.version = static_cast<int32_t>(GetU32(&bytes[0]));
    header.previous_block_hash = Hash256::FromBytes(bytes.subspan(4, 32));
    header.merkle_root = Hash256::FromBytes(bytes.subspan(36, 32));
    header.timestamp = GetU32(&bytes[68]);
    header.bits = CompactTarget{GetU32(&bytes[72])};
    header.nonce = GetU32(&bytes[76]);
    return header;
}

Hash256 BlockHeader::ComputeHash() const {
    const auto bytes = SerializeHeader(*this);
    return DoubleSha256(bytes);
}

}  // namespace hornet::protocol
