// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hornet/protocol/block.hpp"
#include "hornet/protocol/block_header.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::protocol {

// Header fixtures are flat files of concatenated 80-byte headers in height order.
// Block fixtures hold one hex-encoded serialized block.
struct FixtureError {
    std::string message;
};

util::Expected<std::vector<BlockHeader>, FixtureError> ReadHeaderFixture(const std::filesystem::path& path);
util::Expected<std::vector<BlockHeader>, FixtureError> ParseHeaderFixture(std::span<const uint8_t> bytes);
util::Expected<void, FixtureError> WriteHeaderFixture(const std::filesystem::path& path,
                                                      std::span<const BlockHeader> headers);

util::Expected<Block, FixtureError> ReadBlockHex(const std::filesystem::path& path);
util::Expected<void, FixtureError> WriteBlockHex(const std::filesystem::path& path, const Block& block);

}  // namespace hornet::protocol
