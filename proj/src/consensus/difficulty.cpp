// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/consensus/difficulty.hpp"

#include <algorithm>

namespace hornet::consensus {

int64_t ClampTimespan(int64_t actual, const protocol::ChainParams& params) {
    return std::clamp(actual, params.target_timespan / 4, params.target_timespan * 4);
}

util::Expected<protocol::CompactTarget, protocol::TargetError> AdjustCompactTarget(
    int height, const protocol::BlockHeader& parent, const AncestorView& view, const protocol::ChainParams& params) {
    if (height % params.retarget_interval != 0) return parent.bits;

    const int64_t first_timestamp = view.TimestampAtOffset(params.retarget_interval - 1);
    const int64_t timespan = ClampTimespan(int64_t{parent.timestamp} - first_timestamp, params);

    const auto target = parent.bits.Expand();
    if (!target) return target.error();
    auto scaled = protocol::UInt256::MulDiv(*target, static_cast<uint64_t>(timespan),
                                            static_cast<uint64_t>(params.target_timespan));
    if (!scaled || *scaled > params.pow_limit) scaled = params.pow_limit;
    return protocol::CompactTarget::Compress(*scaled);
}

}  // namespace hornet::consensus
