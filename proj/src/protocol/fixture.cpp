// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/fixture.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "hornet/util/hex.hpp"

namespace hornet::protocol {

namespace {
util::Expected<std::vector<uint8_t>, FixtureError> ReadAll(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return FixtureError{"cannot open " + path.string()};
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) return FixtureError{"read failed: " + path.string()};
    return bytes;
}
}  // namespace

util::Expected<std::vector<BlockHeader>, FixtureError> ParseHeaderFixture(std::span<const uint8_t> bytes) {
    if (bytes.size() % BlockHeader::kSerializedSize != 0)
        return FixtureError{"header fixture size " + std::to_string(bytes.size()) + " is not a multiple of 80"};
    std::vector<BlockHeader> headers;
    headers.reserve(bytes.size() / BlockHeader::kSerializedSize);
    for (size_t offset = 0; offset < bytes.size(); offset += BlockHeader::kSerializedSize) {
        headers.push_back(*ParseHeader(bytes.subspan(offset, BlockHeader::kSerializedSize)));
    }
    return headers;
}

util::Expected<std::vector<BlockHeader>, FixtureError> ReadHeaderFixture(const std::filesystem::path& path) {
    const auto bytes = ReadAll(path);
    if (!bytes) return bytes.error();
    return ParseHeaderFixture(*bytes);
}

util::Expected<void, FixtureError> WriteHeaderFixture(const std::filesystem::path& path,
                                                      std::span<const BlockHeader> headers) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return FixtureError{"cannot create " + path.string()};
    for (const BlockHeader& header : headers) {
        const auto bytes = SerializeHeader(header);
        out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    }
    if (!out) return FixtureError{"write failed: " + path.string()};
    return {};
}

util::Expected<Block, FixtureError> ReadBlockHex(const std::filesystem::path& path) {
    const auto bytes = ReadAll(path);
    if (!bytes) return bytes.error();
    const auto raw = util::FromHex(std::string_view(reinterpret_cast<const char*>(bytes->data()), bytes->size()));
    if (!raw) return FixtureError{"not valid hex: " + path.string()};
    auto block = ParseBlock(*raw);
    if (!block) return FixtureError{"malformed block (" + std::string(ToString(block.error())) + "): " + path.string()};
    return std::move(*block);
}

util::Expected<void, FixtureError> WriteBlockHex(const std::filesystem::path& path, const Block& block) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) return FixtureError{"cannot create " + path.string()};
    out << util::ToHex(SerializeBlock(block)) << '\n';
    if (!out) return FixtureError{"write failed: " + path.string()};
    return {};
}

}  // namespace hornet::protocol
