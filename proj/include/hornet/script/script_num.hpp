// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hornet/script/error.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::script {

inline constexpr size_t kMaxOperandSize = 4;

// Little-endian sign-magnitude integer encoding used by script arithmetic. Zero is the
// empty sequence; the top bit of the last byte carries the sign.
std::vector<uint8_t> EncodeScriptNum(int64_t value);

// True if bytes have no redundant trailing zero (or negative-zero) byte.
bool IsMinimalScriptNum(std::span<const uint8_t> bytes);

// Errors: OperandTooLarge if bytes.size() > max_size; NonCanonicalNumber if
// require_minimal and the encoding is not minimal.
util::Expected<int64_t, ScriptError> DecodeScriptNum(std::span<const uint8_t> bytes, size_t max_size,
                                                     bool require_minimal);

}  // namespace hornet::script
