// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>

#include "hornet/protocol/hash.hpp"

namespace hornet::protocol {

Hash256 Sha256(std::span<const uint8_t> data);

// SHA-256 applied twice.
Hash256 DoubleSha256(std::span<const uint8_t> data);

// DoubleSha256(left || right), the Merkle parent of two nodes.
Hash256 HashPair(const Hash256& left, const Hash256& right);

}  // namespace hornet::protocol
