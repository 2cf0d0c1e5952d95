// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <optional>

#include "hornet/data/chain_tree.hpp"
#include "hornet/util/check.hpp"

namespace hornet::data {

// Per-block metadata kept in a tree shaped exactly like the bound header tree.
template <typename M>
class Sidecar final : public TreeObserver {
public:
    template <typename D>
    explicit Sidecar(const ChainTree<D>& source, M default_value = M{})
        : default_(default_value), tree_(source.template MirrorStructure<M>(default_value)) {}

    void OnAdd(const AddEvent& event) override {
        const auto added = tree_.Add(event.parent, NodeContext<M>{default_, event.node.hash, event.node.height});
        HORNET_CHECK(added && *added == event.node);
    }

    void OnPromote(const PromoteEvent& event) override {
        const NodeRef tip{Placement::Forest, event.new_tip.height, event.new_tip.hash};
        const auto promoted = tree_.PromoteBranch(tip, event.demoted);
        HORNET_CHECK(promoted && promoted->new_tip == event.new_tip);
    }

    void OnErase(const EraseEvent& event) override {
        const auto erased = tree_.EraseBranch(event.root);
        HORNET_CHECK(erased && *erased == event.removed.size());
    }

    util::Expected<void, ChainTreeError> Set(int height, const Hash256& hash, M value) {
        const auto ref = tree_.Resolve(height, hash);
        if (!ref) return ChainTreeError::UnknownLocation;
        *tree_.GetMutable(*ref) = std::move(value);
        return {};
    }

    std::optional<M> Get(int height, const Hash256& hash) const {
        const auto ref = tree_.Resolve(height, hash);
        if (!ref) return std::nullopt;
        return *tree_.Get(*ref);
    }

    const ChainTree<M>& Tree() const { return tree_; }

private:
    M default_;
    ChainTree<M> tree_;
};

}  // namespace hornet::data
