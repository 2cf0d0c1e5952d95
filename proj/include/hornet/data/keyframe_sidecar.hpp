// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hornet/data/chain_tree.hpp"
#include "hornet/util/check.hpp"

namespace hornet::data {

// Metadata stored as runs of equal values along the main chain, with exact values for
// forest nodes. Resolution of (height, hash) goes through the bound topology, which must
// outlive the sidecar.
template <typename M>
class KeyframeSidecar final : public TreeObserver {
public:
    explicit KeyframeSidecar(const ChainTopology& topology, M default_value = M{})
        : topology_(&topology), default_(default_value), chain_length_(topology.ChainLength()) {
        if (chain_length_ > 0) keyframes_.emplace(0, default_);
        for (const Hash256& hash : topology.ForestHashes()) forest_values_.emplace(hash, default_);
    }

    void OnAdd(const AddEvent& event) override {
        if (event.node.placement == Placement::Chain) {
            HORNET_CHECK(event.node.height == chain_length_);
            Append(default_);
        } else {
            forest_values_.emplace(event.node.hash, default_);
        }
    }

    void OnPromote(const PromoteEvent& event) override {
        const int first = event.fork_height + 1;
        HORNET_CHECK(first + static_cast<int>(event.demoted.size()) == chain_length_);
        for (size_t i = 0; i < event.demoted.size(); ++i)
            forest_values_[event.demoted[i]] = ValueAt(first + static_cast<int>(i));
        keyframes_.erase(keyframes_.lower_bound(first), keyframes_.end());
        chain_length_ = first;
        for (const Hash256& hash : event.promoted) {
            auto node = forest_values_.extract(hash);
            HORNET_CHECK(!node.empty());
            Append(std::move(node.mapped()));
        }
    }

    void OnErase(const EraseEvent& event) override {
        for (const Hash256& hash : event.removed) forest_values_.erase(hash);
    }

    util::Expected<void, ChainTreeError> Set(int height, const Hash256& hash, M value) {
        const auto ref = topology_->Resolve(height, hash);
        if (!ref) return ChainTreeError::UnknownLocation;
        if (ref->placement == Placement::Forest) {
            forest_values_[hash] = std::move(value);
            return {};
        }
        SetChainValue(height, std::move(value));
        return {};
    }

    std::optional<M> Get(int height, const Hash256& hash) const {
        const auto ref = topology_->Resolve(height, hash);
        if (!ref) return std::nullopt;
        if (ref->placement == Placement::Forest) return forest_values_.at(hash);
        return ValueAt(height);
    }

    // Requires 0 <= height < ChainLength().
    const M& ValueAt(int height) const { return std::prev(keyframes_.upper_bound(height))->second; }

    int ChainLength() const { return chain_length_; }
    size_t KeyframeCount() const { return keyframes_.size(); }
    size_t ForestValueCount() const { return forest_values_.size(); }
    const std::map<int, M>& Keyframes() const { return keyframes_; }

private:
    void Append(M value) {
        if (keyframes_.empty() || keyframes_.rbegin()->second != value) keyframes_.emplace(chain_length_, std::move(value));
        ++chain_length_;
    }

    void SetChainValue(int height, M value) {
        if (ValueAt(height) == value) return;
        if (height + 1 < chain_length_ && !keyframes_.contains(height + 1))
            keyframes_.emplace(height + 1, ValueAt(height));
        keyframes_[height] = std::move(value);
        DropIfRedundant(height + 1);
        DropIfRedundant(height);
    }

    // Removes the keyframe at height when it repeats the preceding run's value.
    void DropIfRedundant(int height) {
        const auto it = keyframes_.find(height);
        if (it == keyframes_.end() || it == keyframes_.begin()) return;
        if (std::prev(it)->second == it->second) keyframes_.erase(it);
    }

    const ChainTopology* topology_;
    M default_;
    int chain_length_ = 0;
    std::map<int, M> keyframes_;
    std::unordered_map<Hash256, M> forest_values_;
};

}  // namespace hornet::data
