// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/data/header_tree.hpp"

#include <algorithm>

#include "hornet/consensus/rulesets.hpp"

namespace hornet::data {

uint32_t TreeAncestorView::TimestampAtOffset(int offset) const {
    const int height = parent_.height - offset;
    if (parent_.placement == Placement::Chain) return tree_.ChainAt(height).timestamp;
    return tree_.GetAncestorAtHeight(parent_, height)->timestamp;
}

std::string ToString(const AcceptError& error) {
    return std::visit([](auto e) { return std::string(ToString(e)); }, error);
}

util::Expected<NodeRef, AcceptError> AcceptGenesis(HeaderTree& tree, const protocol::BlockHeader& header,
                                                   const protocol::ChainParams& params) {
    const Hash256 hash = header.ComputeHash();
    if (params.genesis_hash && *params.genesis_hash != hash) return AcceptError{ChainTreeError::UnknownLocation};
    auto added = tree.Add(std::nullopt, NodeContext<protocol::BlockHeader>{header, hash, 0});
    if (!added) return AcceptError{added.error()};
    return *added;
}

namespace {

std::optional<NodeRef> FindParent(const HeaderTree& tree, const Hash256& hash) {
    if (auto found = tree.FindInTipOrForks(hash)) return found;
    const auto hashes = tree.ChainHashes();
    const int stop = std::max(0, tree.ChainLength() - kForkSearchDepth);
    for (int h = tree.ChainLength() - 2; h >= stop; --h)
        if (hashes[h] == hash) return tree.Find(h);
    return std::nullopt;
}

}  // namespace

util::Expected<NodeRef, AcceptError> AcceptHeader(HeaderTree& tree, const protocol::BlockHeader& header,
                                                  int64_t current_time, const protocol::ChainParams& params) {
    const auto parent_ref = FindParent(tree, header.previous_block_hash);
    if (!parent_ref) return AcceptError{consensus::HeaderError::ParentNotFound};

    const consensus::HeaderContext parent{parent_ref->hash, parent_ref->height, *tree.Get(*parent_ref)};
    const TreeAncestorView view(tree, *parent_ref);
    if (const auto valid = consensus::ValidateHeader(header, parent, view, current_time, params); !valid)
        return AcceptError{valid.error()};

    auto added = tree.Add(*parent_ref, NodeContext<protocol::BlockHeader>{header, header.ComputeHash(), parent.height + 1});
    if (!added) return AcceptError{added.error()};
    return *added;
}

}  // namespace hornet::data
