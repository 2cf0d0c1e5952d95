// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hornet/protocol/hash.hpp"

namespace hornet::protocol {

// Fixed-width 256-bit unsigned integer, four 64-bit limbs, least significant first.
class UInt256 {
public:
    constexpr UInt256() = default;
    constexpr UInt256(uint64_t low) : limbs_{low, 0, 0, 0} {}  // NOLINT: implicit by design of arithmetic types

    static UInt256 FromHash(const Hash256& hash);
    Hash256 ToHash() const;

    // Big-endian hex without prefix; accepts 1..64 digits.
    static std::optional<UInt256> FromHex(std::string_view hex);
    std::string ToHex() const;  // 64 digits, big-endian

    static constexpr UInt256 Max() {
        UInt256 out;
        out.limbs_ = {~0ull, ~0ull, ~0ull, ~0ull};
        return out;
    }

    uint64_t Low64() const { return limbs_[0]; }
    uint64_t Limb(int i) const { return limbs_[i]; }
    bool IsZero() const { return (limbs_[0] | limbs_[1] | limbs_[2] | limbs_[3]) == 0; }
    int BitLength() const;

    UInt256 operator<<(unsigned shift) const;
    UInt256 operator>>(unsigned shift) const;

    // floor(value * multiplier / divisor) computed with a 320-bit intermediate.
    // Returns nullopt if the quotient does not fit in 256 bits. divisor must be nonzero.
    static std::optional<UInt256> MulDiv(const UInt256& value, uint64_t multiplier, uint64_t divisor);

    friend constexpr bool operator==(const UInt256&, const UInt256&) = default;
    friend constexpr std::strong_ordering operator<=>(const UInt256& a, const UInt256& b) {
        for (int i = 3; i >= 0; --i) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    std::array<uint64_t, 4> limbs_{};
};

}  // namespace hornet::protocol
