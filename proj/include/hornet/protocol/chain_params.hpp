// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hornet/protocol/bip.hpp"
#include "hornet/protocol/hash.hpp"
#include "hornet/protocol/uint256.hpp"

namespace hornet::protocol {

struct ChainParams {
    std::string name;
    int retarget_interval = 2016;
    int64_t target_timespan = 14 * 24 * 60 * 60;
    UInt256 pow_limit;
    int64_t max_money = 21'000'000 * int64_t{100'000'000};
    int64_t timestamp_tolerance = 2 * 60 * 60;
    int max_block_sigops = 20'000;
    uint32_t locktime_threshold = 500'000'000;
    // Indexed by BIP.
    std::array<int, kBipCount> bip_activation_heights{};
    // Accept headers whose bits encode pow_limit at any height.
    bool allow_min_difficulty = false;
    // When set, the first header of a chain must hash to this value.
    std::optional<Hash256> genesis_hash;

    int ActivationHeight(BIP bip) const { return bip_activation_heights[static_cast<size_t>(bip)]; }
    void SetActivationHeight(BIP bip, int height) { bip_activation_heights[static_cast<size_t>(bip)] = height; }

    // retarget_interval > 0, target_timespan > 0, activation heights >= 0, pow_limit > 0.
    bool IsValid() const;

    static ChainParams Mainnet();
    // Trivial proof of work, every BIP active from height 0.
    static ChainParams Regtest();
    static std::optional<ChainParams> FromName(std::string_view name);
};

}  // namespace hornet::protocol
