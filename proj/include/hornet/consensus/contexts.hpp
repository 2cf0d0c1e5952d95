// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>

#include "hornet/consensus/ancestry.hpp"
#include "hornet/protocol/block.hpp"
#include "hornet/protocol/chain_params.hpp"

namespace hornet::consensus {

// A header already accepted into the chain.
struct HeaderContext {
    protocol::Hash256 hash;
    int height = 0;
    protocol::BlockHeader data;

    static HeaderContext FromHeader(const protocol::BlockHeader& header, int height) {
        return {header.ComputeHash(), height, header};
    }
};

struct HeaderValidationContext {
    const protocol::BlockHeader& header;
    const HeaderContext& parent;
    const AncestorView& view;
    int64_t current_time;
    int height;  // parent.height + 1
    const protocol::ChainParams& params;
};

struct TransactionValidationContext {
    const protocol::Transaction& transaction;
    const protocol::ChainParams& params;
};

struct BlockStructureContext {
    const protocol::Block& block;
    const protocol::ChainParams& params;
};

struct BlockValidationContext {
    const protocol::Block& block;
    int height;
    const AncestorView& ancestry;
    const protocol::ChainParams& params;
};

}  // namespace hornet::consensus
