// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/compact_target.hpp"

namespace hornet::protocol {

std::string_view ToString(TargetError error) {
    switch (error) {
        case TargetError::NegativeTarget: return "NegativeTarget";
        case TargetError::Overflow: return "Overflow";
        case TargetError::ZeroTarget: return "ZeroTarget";
    }
    return "Unknown";
}

util::Expected<UInt256, TargetError> CompactTarget::Expand() const {
    const unsigned exponent = bits >> 24;
    const uint32_t mantissa = bits & 0x007fffff;
    if ((bits & 0x00800000) != 0 && mantissa != 0) return TargetError::NegativeTarget;
    if (mantissa != 0 &&
        (exponent > 34 || (mantissa > 0xff && exponent > 33) || (mantissa > 0xffff && exponent > 32)))
        return TargetError::Overflow;

    const UInt256 value =
        exponent <= 3 ? UInt256{mantissa >> (8 * (3 - exponent))} : UInt256{mantissa} << (8 * (exponent - 3));
    if (value.IsZero()) return TargetError::ZeroTarget;
    return value;
}

util::Expected<CompactTarget, TargetError> CompactTarget::Compress(const UInt256& target) {
    if (target.IsZero()) return TargetError::ZeroTarget;
    unsigned size = static_cast<unsigned>((target.BitLength() + 7) / 8);
    uint32_t mantissa = size <= 3 ? static_cast<uint32_t>(target.Low64() << (8 * (3 - size)))
                                  : static_cast<uint32_t>((target >> (8 * (size - 3))).Low64());
    // Keep the sign bit clear by moving one byte into the exponent.
    if ((mantissa & 0x00800000) != 0) {
        mantissa >>= 8;
        ++size;
    }
    return CompactTarget{(size << 24) | mantissa};
}

}  // namespace hornet::protocol
