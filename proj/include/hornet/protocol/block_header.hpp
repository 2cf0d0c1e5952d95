// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "hornet/protocol/compact_target.hpp"
#include "hornet/protocol/hash.hpp"
#include "hornet/protocol/serialize.hpp"

namespace hornet::protocol {

struct BlockHeader {
    static constexpr size_t kSerializedSize = 80;

    int32_t version = 0;
    Hash256 previous_block_hash;
    Hash256 merkle_root;
    uint32_t timestamp = 0;
    CompactTarget bits;
    uint32_t nonce = 0;

    // SHA256d of the 80-byte serialization.
    Hash256 ComputeHash() const;

    friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

std::array<uint8_t, BlockHeader::kSerializedSize> SerializeHeader(const BlockHeader& header);

// Input must be exactly 80 bytes.
util::Expected<BlockHeader, ParseError> ParseHeader(std::span<const uint8_t> bytes);

inline Hash256 HeaderHash(const BlockHeader& header) { return header.ComputeHash(); }

}  // namespace hornet::protocol
