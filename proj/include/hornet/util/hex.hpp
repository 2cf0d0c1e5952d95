// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hornet::util {

using Bytes = std::vector<uint8_t>;

std::string ToHex(std::span<const uint8_t> bytes);

// Returns nullopt on odd length or non-hex characters. Surrounding whitespace is ignored.
std::optional<Bytes> FromHex(std::string_view hex);

}  // namespace hornet::util
