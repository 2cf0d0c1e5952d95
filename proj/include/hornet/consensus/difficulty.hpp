// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include "hornet/consensus/ancestry.hpp"
#include "hornet/protocol/block_header.hpp"
#include "hornet/protocol/chain_params.hpp"
#include "hornet/protocol/compact_target.hpp"

namespace hornet::consensus {

// The timespan actually used for a retarget: actual clamped to [timespan/4, timespan*4].
int64_t ClampTimespan(int64_t actual, const protocol::ChainParams& params);

// Required bits for the block at height whose parent is given. Off a retarget boundary
// this is the parent's bits. At a boundary the parent's target is scaled by the clamped
// time the closing period took, relative to target_timespan, capped at pow_limit. The
// period's first block is retarget_interval - 1 blocks behind the parent.
util::Expected<protocol::CompactTarget, protocol::TargetError> AdjustCompactTarget(
    int height, const protocol::BlockHeader& parent, const AncestorView& view, const protocol::ChainParams& params);

}  // namespace hornet::consensus
