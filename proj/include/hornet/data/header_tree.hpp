// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "hornet/consensus/ancestry.hpp"
#include "hornet/consensus/contexts.hpp"
#include "hornet/consensus/errors.hpp"
#include "hornet/data/chain_tree.hpp"
#include "hornet/protocol/block_header.hpp"
#include "hornet/protocol/chain_params.hpp"

namespace hornet::data {

using HeaderTree = ChainTree<protocol::BlockHeader>;

// Ancestors of a node in a header tree, with offset 0 at the node itself.
class TreeAncestorView final : public consensus::AncestorView {
public:
    TreeAncestorView(const HeaderTree& tree, const NodeRef& parent) : tree_(tree), parent_(parent) {}

    int Depth() const override { return parent_.height + 1; }
    uint32_t TimestampAtOffset(int offset) const override;

private:
    const HeaderTree& tree_;
    NodeRef parent_;
};

using AcceptError = std::variant<consensus::HeaderError, ChainTreeError>;

std::string ToString(const AcceptError& error);

// Seeds an empty tree. The header is axiomatic; only the configured genesis hash is checked.
util::Expected<NodeRef, AcceptError> AcceptGenesis(HeaderTree& tree, const protocol::BlockHeader& header,
                                                   const protocol::ChainParams& params);

// Main-chain depth searched for a parent that is neither the tip nor in the forest.
inline constexpr int kForkSearchDepth = 2016;

// Validates a header against its parent and inserts it. The parent is looked up among the tip and forks,
// then among the last kForkSearchDepth main-chain entries.
util::Expected<NodeRef, AcceptError> AcceptHeader(HeaderTree& tree, const protocol::BlockHeader& header,
                                                  int64_t current_time, const protocol::ChainParams& params);

}  // namespace hornet::data
