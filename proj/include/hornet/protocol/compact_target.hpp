// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <string_view>

#include "hornet/protocol/uint256.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::protocol {

enum class TargetError { NegativeTarget, Overflow, ZeroTarget };

std::string_view ToString(TargetError error);

// The 32-bit "nBits" encoding of a proof-of-work target: an exponent byte followed by a
// 24-bit mantissa whose top bit is a sign flag.
struct CompactTarget {
    uint32_t bits = 0;

    // value = mantissa * 256^(exponent - 3)
    util::Expected<UInt256, TargetError> Expand() const;

    // Canonical compact encoding; precision is truncated to the mantissa's 23 bits.
    static util::Expected<CompactTarget, TargetError> Compress(const UInt256& target);

    friend constexpr bool operator==(CompactTarget, CompactTarget) = default;
};

}  // namespace hornet::protocol
