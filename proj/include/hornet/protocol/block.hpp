// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <span>
#include <vector>

#include "hornet/protocol/block_header.hpp"
#include "hornet/protocol/transaction.hpp"

namespace hornet::protocol {

struct Block {
    BlockHeader header;
    std::vector<Transaction> transactions;

    friend bool operator==(const Block&, const Block&) = default;
};

Bytes SerializeBlock(const Block& block, WitnessMode mode = WitnessMode::Include);
util::Expected<Block, ParseError> ParseBlock(std::span<const uint8_t> bytes);

size_t SerializedSize(const Block& block, WitnessMode mode);

// 3 x base size + total size.
size_t BlockWeight(const Block& block);

enum class MerkleError { EmptyList };

// Standard Bitcoin Merkle tree: the last node of an odd level is paired with itself.
util::Expected<Hash256, MerkleError> MerkleRoot(std::span<const Hash256> leaves);

}  // namespace hornet::protocol
