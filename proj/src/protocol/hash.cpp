// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/hash.hpp"

#include <algorithm>
#include <cassert>

#include "hornet/util/hex.hpp"

namespace hornet::protocol {

Hash256 Hash256::FromBytes(std::span<const uint8_t> bytes) {
    assert(bytes.size() == kSize);
    Hash256 out;
    std::copy_n(bytes.begin(), kSize, out.bytes_.begin());
    return out;
}

std::optional<Hash256> Hash256::FromString(std::string_view display_hex) {
    if (display_hex.size() != 2 * kSize) return std::nullopt;
    auto bytes = util::FromHex(display_hex);
    if (!bytes) return std::nullopt;
    std::reverse(bytes->begin(), bytes->end());
    return FromBytes(*bytes);
}

std::string Hash256::ToString() const {
    std::array<uint8_t, kSize> reversed;
    std::reverse_copy(bytes_.begin(), bytes_.end(), reversed.begin());
    return util::ToHex(reversed);
}

bool Hash256::IsNull() const {
    return std::all_of(bytes_.begin(), bytes_.end(), [](uint8_t b) { return b == 0; });
}

}  // namespace hornet::protocol
