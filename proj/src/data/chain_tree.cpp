// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/data/chain_tree.hpp"

namespace hornet::data {

std::string_view ToString(ChainTreeError error) {
    switch (error) {
        case ChainTreeError::UnknownParent: return "UnknownParent";
        case ChainTreeError::HeightMismatch: return "HeightMismatch";
        case ChainTreeError::DuplicateHash: return "DuplicateHash";
        case ChainTreeError::NotInForest: return "NotInForest";
        case ChainTreeError::StaleChainHashes: return "StaleChainHashes";
        case ChainTreeError::HeightOutOfRange: return "HeightOutOfRange";
        case ChainTreeError::UnknownLocation: return "UnknownLocation";
    }
    return "Unknown";
}

std::string_view ToString(Placement placement) {
    return placement == Placement::Chain ? "chain" : "forest";
}

}  // namespace hornet::data
