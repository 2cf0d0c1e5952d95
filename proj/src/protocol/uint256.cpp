// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/uint256.hpp"

#include <bit>

#include "hornet/util/hex.hpp"

namespace hornet::protocol {

UInt256 UInt256::FromHash(const Hash256& hash) {
    UInt256 out;
    for (int limb = 0; limb < 4; ++limb) {
        uint64_t v = 0;
        for (int b = 7; b >= 0; --b) v = (v << 8) | hash[limb * 8 + b];
        out.limbs_[limb] = v;
    }
    return out;
}

Hash256 UInt256::ToHash() const {
    std::array<uint8_t, 32> bytes;
    for (int limb = 0; limb < 4; ++limb) {
        for (int b = 0; b < 8; ++b) bytes[limb * 8 + b] = static_cast<uint8_t>(limbs_[limb] >> (8 * b));
    }
    return Hash256{bytes};
}

std::optional<UInt256> UInt256::FromHex(std::string_view hex) {
    if (hex.empty() || hex.size() > 64) return std::nullopt;
    std::string padded(64 - hex.size(), '0');
    padded.append(hex);
    const auto bytes = util::FromHex(padded);
    if (!bytes) return std::nullopt;
    UInt256 out;
    for (int i = 0; i < 32; ++i) {
        const int limb = 3 - i / 8;
        out.limbs_[limb] = (out.limbs_[limb] << 8) | (*bytes)[i];
    }
    return out;
}

std::string UInt256::ToHex() const {
    std::array<uint8_t, 32> bytes;
    for (int i = 0; i < 32; ++i) {
        const int limb = 3 - i / 8;
        bytes[i] = static_cast<uint8_t>(limbs_[limb] >> (8 * (7 - i % 8)));
    }
    return util::ToHex(bytes);
}

int UInt256::BitLength() const {
    for (int i = 3; i >= 0; --i) {
        if (limbs_[i] != 0) return i * 64 + (64 - std::countl_zero(limbs_[i]));
    }
    return 0;
}

UInt256 UInt256::operator<<(unsigned shift) const {
    UInt256 out;
    if (shift >= 256) return out;
    const unsigned limb_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (int i = 3; i >= static_cast<int>(limb_shift); --i) {
        uint64_t v = limbs_[i - limb_shift] << bit_shift;
        if (bit_shift != 0 && i - static_cast<int>(limb_shift) - 1 >= 0)
            v |= limbs_[i - limb_shift - 1] >> (64 - bit_shift);
        out.limbs_[i] = v;
    }
    return out;
}

UInt256 UInt256::operator>>(unsigned shift) const {
    UInt256 out;
    if (shift >= 256) return out;
    const unsigned limb_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (unsigned i = 0; i + limb_shift < 4; ++i) {
        uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < 4) v |= limbs_[i + limb_shift + 1] << (64 - bit_shift);
        out.limbs_[i] = v;
    }
    return out;
}

std::optional<UInt256> UInt256::MulDiv(const UInt256& value, uint64_t multiplier, uint64_t divisor) {
    using u128 = unsigned __int128;
    std::array<uint64_t, 5> wide{};
    uint64_t carry = 0;
    for (int i = 0; i < 4; ++i) {
        const u128 product = static_cast<u128>(value.limbs_[i]) * multiplier + carry;
        wide[i] = static_cast<uint64_t>(product);
        carry = static_cast<uint64_t>(product >> 64);
    }
    wide[4] = carry;

    u128 remainder = 0;
    for (int i = 4; i >= 0; --i) {
        const u128 current = (remainder << 64) | wide[i];
        wide[i] = static_cast<uint64_t>(current / divisor);
        remainder = current % divisor;
    }
    if (wide[4] != 0) return std::nullopt;
    UInt256 out;
    for (int i = 0; i < 4; ++i) out.limbs_[i] = wide[i];
    return out;
}

}  // namespace hornet::protocol
