// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/hashing.hpp"

#include <openssl/sha.h>

#include <array>

namespace hornet::protocol {

Hash256 Sha256(std::span<const uint8_t> data) {
    std::array<uint8_t, Hash256::kSize> digest;
    SHA256(data.data(), data.size(), digest.data());
    return Hash256{digest};
}

Hash256 DoubleSha256(std::span<const uint8_t> data) {
    const Hash256 once = Sha256(data);
    return Sha256(once.Bytes());
}

Hash256 HashPair(const Hash256& left, const Hash256& right) {
    std::array<uint8_t, 2 * Hash256::kSize> buffer;
    std::copy(left.Bytes().begin(), left.Bytes().end(), buffer.begin());
    std::copy(right.Bytes().begin(), right.Bytes().end(), buffer.begin() + Hash256::kSize);
    return DoubleSha256(buffer);
}

}  // namespace hornet::protocol
