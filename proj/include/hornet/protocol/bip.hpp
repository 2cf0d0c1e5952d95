// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace hornet::protocol {

// Height-activated ("buried") soft-fork deployments that gate consensus rules.
enum class BIP {
    HeightInCoinbase,        // BIP34
    StrictDER,               // BIP66
    CheckLockTimeVerify,     // BIP65
    MedianTimePastLocktime,  // BIP113
    SegWit,                  // BIP141
};

inline constexpr size_t kBipCount = 5;
inline constexpr std::array<BIP, kBipCount> kAllBips = {BIP::HeightInCoinbase, BIP::StrictDER,
                                                       BIP::CheckLockTimeVerify, BIP::MedianTimePastLocktime,
                                                       BIP::SegWit};

// Enumerant name, e.g. "HeightInCoinbase".
std::string_view ToString(BIP bip);
// Proposal number label, e.g. "BIP34".
std::string_view ToLabel(BIP bip);
// Accepts either the enumerant name or the proposal label.
std::optional<BIP> ParseBip(std::string_view text);

}  // namespace hornet::protocol
