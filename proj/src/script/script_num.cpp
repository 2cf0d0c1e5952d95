// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/script/script_num.hpp"

#include <cstdlib>

namespace hornet::script {

std::vector<uint8_t> EncodeScriptNum(int64_t value) {
    std::vector<uint8_t> out;
    if (value == 0) return out;
    const bool negative = value < 0;
    uint64_t magnitude = negative ? 0 - static_cast<uint64_t>(value) : static_cast<uint64_t>(value);
    while (magnitude != 0) {
        out.push_back(static_cast<uint8_t>(magnitude & 0xff));
        magnitude >>= 8;
    }
    // The sign lives in the top bit of the last byte; add a byte if that bit is taken.
    if ((out.back() & 0x80) != 0) {
        out.push_back(negative ? 0x80 : 0x00);
    } else if (negative) {
        out.back() |= 0x80;
    }
    return out;
}

bool IsMinimalScriptNum(std::span<const uint8_t> bytes) {
    if (bytes.empty()) return true;
    if ((bytes.back() & 0x7f) != 0) return true;
    // Last byte is 0x00 or 0x80: only allowed when it escapes the previous byte's high bit.
    return bytes.size() > 1 && (bytes[bytes.size() - 2] & 0x80) != 0;
}

util::Expected<int64_t, ScriptError> DecodeScriptNum(std::span<const uint8_t> bytes, size_t max_size,
                                                     bool require_minimal) {
    if (bytes.size() > max_size) return ScriptError::OperandTooLarge;
    if (require_minimal && !IsMinimalScriptNum(bytes)) return ScriptError::NonCanonicalNumber;
    if (bytes.empty()) return int64_t{0};
    uint64_t magnitude = 0;
    for (size_t i = 0; i < bytes.size(); ++i) magnitude |= static_cast<uint64_t>(bytes[i]) << (8 * i);
    const uint64_t sign_bit = uint64_t{0x80} << (8 * (bytes.size() - 1));
    if ((magnitude & sign_bit) != 0) return -static_cast<int64_t>(magnitude & ~sign_bit);
    return static_cast<int64_t>(magnitude);
}

}  // namespace hornet::script
