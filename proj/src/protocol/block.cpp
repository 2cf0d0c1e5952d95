// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/block.hpp"

#include "hornet/protocol/hashing.hpp"

namespace hornet::protocol {

Bytes SerializeBlock(const Block& block, WitnessMode mode) {
    Writer writer;
    writer.Raw(SerializeHeader(block.header));
    writer.CompactSize(block.transactions.size());
    for (const Transaction& tx : block.transactions) SerializeTransaction(writer, tx, mode);
    return writer.Release();
}

util::Expected<Block, ParseError> ParseBlock(std::span<const uint8_t> bytes) {
    if (bytes.size() < BlockHeader::kSerializedSize) return ParseError::Truncated;
    Block block;
    const auto header = ParseHeader(bytes.first(BlockHeader::kSerializedSize));
    if (!header) return header.error();
    block.header = *header;
    Reader reader{bytes.subspan(BlockHeader::kSerializedSize)};
    const auto count = reader.CompactSize();
    if (!count) return count.error();
    for (uint64_t i = 0; i < *count; ++i) {
        auto tx = ParseTransaction(reader);
        if (!tx) return tx.error();
        block.transactions.push_back(std::move(*tx));
    }
    if (reader.Remaining() != 0) return ParseError::TrailingBytes;
    return block;
}

size_t SerializedSize(const Block& block, WitnessMode mode) {
    size_t size = BlockHeader::kSerializedSize + CompactSizeLength(block.transactions.size());
    for (const Transaction& tx : block.transactions) size += SerializedSize(tx, mode);
    return size;
}

size_t BlockWeight(const Block& block) {
    return 3 * SerializedSize(block, WitnessMode::Exclude) + SerializedSize(block, WitnessMode::Include);
}

util::Expected<Hash256, MerkleError> MerkleRoot(std::span<const Hash256> leaves) {
    if (leaves.empty()) return MerkleError::EmptyList;
    std::vector<Hash256> level(leaves.begin(), leaves.end());
    while (level.size() > 1) {
        if (level.size() % 2 != 0) level.push_back(level.back());
        std::vector<Hash256> parents;
        parents.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2) parents.push_back(HashPair(level[i], level[i + 1]));
        level = std::move(parents);
    }
    return level.front();
}

}  // namespace hornet::protocol
