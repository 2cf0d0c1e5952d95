// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/chain_params.hpp"

#include <algorithm>

namespace hornet::protocol {

std::string_view ToString(BIP bip) {
    switch (bip) {
        case BIP::HeightInCoinbase: return "HeightInCoinbase";
        case BIP::StrictDER: return "StrictDER";
        case BIP::CheckLockTimeVerify: return "CheckLockTimeVerify";
        case BIP::MedianTimePastLocktime: return "MedianTimePastLocktime";
        case BIP::SegWit: return "SegWit";
    }
    return "Unknown";
}

std::string_view ToLabel(BIP bip) {
    switch (bip) {
        case BIP::HeightInCoinbase: return "BIP34";
        case BIP::StrictDER: return "BIP66";
        case BIP::CheckLockTimeVerify: return "BIP65";
        case BIP::MedianTimePastLocktime: return "BIP113";
        case BIP::SegWit: return "BIP141";
    }
    return "Unknown";
}

std::optional<BIP> ParseBip(std::string_view text) {
    for (const BIP bip : kAllBips) {
        if (text == ToString(bip) || text == ToLabel(bip)) return bip;
    }
    return std::nullopt;
}

bool ChainParams::IsValid() const {
    return retarget_interval > 0 && target_timespan > 0 && !pow_limit.IsZero() &&
           std::all_of(bip_activation_heights.begin(), bip_activation_heights.end(), [](int h) { return h >= 0; });
}

ChainParams ChainParams::Mainnet() {
    ChainParams params;
    params.name = "mainnet";
    params.pow_limit = UInt256::Max() >> 32;
    params.SetActivationHeight(BIP::HeightInCoinbase, 227'931);
    params.SetActivationHeight(BIP::StrictDER, 363'725);
    params.SetActivationHeight(BIP::CheckLockTimeVerify, 388'381);
    params.SetActivationHeight(BIP::MedianTimePastLocktime, 419'328);
    params.SetActivationHeight(BIP::SegWit, 481'824);
    params.genesis_hash = Hash256::FromString("000000000019d6689c085ae165831e934ff763ae46a2a6c172b3f1b60a8ce26f");
    return params;
}

ChainParams ChainParams::Regtest() {
    ChainParams params;
    params.name = "regtest";
    params.pow_limit = UInt256::Max() >> 1;
    params.bip_activation_heights.fill(0);
    return params;
}

std::optional<ChainParams> ChainParams::FromName(std::string_view name) {
    if (name == "mainnet") return Mainnet();
    if (name == "regtest") return Regtest();
    return std::nullopt;
}

}  // namespace hornet::protocol
