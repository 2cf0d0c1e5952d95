// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hornet/protocol/hash.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::data {

using protocol::Hash256;

enum class ChainTreeError {
    UnknownParent,
    HeightMismatch,
    DuplicateHash,
    NotInForest,
    StaleChainHashes,
    HeightOutOfRange,
    UnknownLocation,
};

std::string_view ToString(ChainTreeError error);

enum class Placement { Chain, Forest };

std::string_view ToString(Placement placement);

template <typename D>
struct NodeContext {
    D data;
    Hash256 hash;
    int height = 0;
};

// Identifies a node by its key. Remains meaningful across trees with identical structure.
struct NodeRef {
    Placement placement = Placement::Chain;
    int height = 0;
    Hash256 hash;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// Resolves either by main-chain height or by hash in the tip or forest.
using Locator = std::variant<int, Hash256>;

struct PromoteResult {
    NodeRef new_tip;
    std::optional<NodeRef> demoted_root;
};

struct AddEvent {
    std::optional<NodeRef> parent;
    NodeRef node;
};

// The promoted path and demoted suffix are both in ascending height order, starting
// at fork_height + 1.
struct PromoteEvent {
    int fork_height = 0;
    std::vector<Hash256> promoted;
    std::vector<Hash256> demoted;
    NodeRef new_tip;
};

struct EraseEvent {
    NodeRef root;
    std::vector<Hash256> removed;
};

// Receives every structural mutation of a tree after it is applied.
class TreeObserver {
public:
    virtual ~TreeObserver() = default;
    virtual void OnAdd(const AddEvent& event) = 0;
    virtual void OnPromote(const PromoteEvent& event) = 0;
    virtual void OnErase(const EraseEvent& event) = 0;
};

// Payload-independent queries over a tree's shape.
class ChainTopology {
public:
    virtual ~ChainTopology() = default;
    virtual int ChainLength() const = 0;
    virtual std::optional<NodeRef> Resolve(int height, const Hash256& hash) const = 0;
    virtual std::vector<Hash256> ForestHashes() const = 0;
};

// A main-chain array of payloads plus a hash-keyed forest of forks. Each forest node
// links either to another forest node or to a main-chain height.
template <typename D>
class ChainTree : public ChainTopology {
public:
    using Parent = std::variant<int, Hash256>;

    ChainTree() = default;
    // Copies carry the structure and payloads but no observers.
    ChainTree(const ChainTree& other)
        : chain_(other.chain_), chain_hashes_(other.chain_hashes_), forest_(other.forest_), roots_(other.roots_) {}
    ChainTree& operator=(const ChainTree& other) {
        if (this != &other) {
            chain_ = other.chain_;
            chain_hashes_ = other.chain_hashes_;
            forest_ = other.forest_;
            roots_ = other.roots_;
        }
        return *this;
    }
    ChainTree(ChainTree&&) = default;
    ChainTree& operator=(ChainTree&&) = default;

    int ChainLength() const override { return static_cast<int>(chain_.size()); }
    size_t ForestSize() const { return forest_.size(); }
    size_t Size() const { return chain_.size() + forest_.size(); }
    bool Empty() const { return chain_.empty(); }

    std::optional<NodeRef> Tip() const {
        if (chain_.empty()) return std::nullopt;
        return ChainRef(ChainLength() - 1);
    }

    void AddObserver(TreeObserver* observer) { observers_.push_back(observer); }
    void RemoveObserver(TreeObserver* observer) { std::erase(observers_, observer); }

    // With no parent, only a height-0 node on an empty tree is accepted.
    util::Expected<NodeRef, ChainTreeError> Add(const std::optional<NodeRef>& parent, NodeContext<D> context) {
        if (!parent) {
            if (!chain_.empty()) return ChainTreeError::UnknownParent;
            if (context.height != 0) return ChainTreeError::HeightMismatch;
            chain_.push_back(std::move(context.data));
            chain_hashes_.push_back(context.hash);
            return Notify(AddEvent{std::nullopt, ChainRef(0)});
        }
        const auto resolved = Resolve(parent->height, parent->hash);
        if (!resolved) return ChainTreeError::UnknownParent;
        if (context.height != resolved->height + 1) return ChainTreeError::HeightMismatch;
        if (Resolve(context.height, context.hash) || forest_.contains(context.hash))
            return ChainTreeError::DuplicateHash;

        const int tip_height = ChainLength() - 1;
        if (resolved->placement == Placement::Chain && resolved->height == tip_height && !roots_.contains(tip_height)) {
            chain_.push_back(std::move(context.data));
            chain_hashes_.push_back(context.hash);
            return Notify(AddEvent{*resolved, ChainRef(context.height)});
        }

        const Hash256 hash = context.hash;
        const int height = context.height;
        ForestNode node{std::move(context.data), height, {}, {}};
        if (resolved->placement == Placement::Chain) {
            node.parent = resolved->height;
            roots_[resolved->height].push_back(hash);
        } else {
            node.parent = resolved->hash;
            forest_.at(resolved->hash).children.push_back(hash);
        }
        forest_.emplace(hash, std::move(node));
        return Notify(AddEvent{*resolved, NodeRef{Placement::Forest, height, hash}});
    }

    // Locates a node by exact key: a main-chain slot holding that hash, or a forest node.
    std::optional<NodeRef> Resolve(int height, const Hash256& hash) const override {
        if (height >= 0 && height < ChainLength() && chain_hashes_[height] == hash) return ChainRef(height);
        const auto it = forest_.find(hash);
        if (it != forest_.end() && it->second.height == height) return NodeRef{Placement::Forest, height, hash};
        return std::nullopt;
    }

    std::optional<NodeRef> Find(const Locator& locator) const {
        if (const int* height = std::get_if<int>(&locator)) {
            if (*height < 0 || *height >= ChainLength()) return std::nullopt;
            return ChainRef(*height);
        }
        return FindInTipOrForks(std::get<Hash256>(locator));
    }

    // Only the tip and forest nodes are searched; interior main-chain hashes are not found.
    std::optional<NodeRef> FindInTipOrForks(const Hash256& hash) const {
        if (!chain_.empty() && chain_hashes_.back() == hash) return ChainRef(ChainLength() - 1);
        const auto it = forest_.find(hash);
        if (it == forest_.end()) return std::nullopt;
        return NodeRef{Placement::Forest, it->second.height, hash};
    }

    const D* Get(const NodeRef& ref) const {
        const auto resolved = Resolve(ref.height, ref.hash);
        if (!resolved) return nullptr;
        if (resolved->placement == Placement::Chain) return &chain_[ref.height];
        return &forest_.at(ref.hash).data;
    }

    D* GetMutable(const NodeRef& ref) { return const_cast<D*>(std::as_const(*this).Get(ref)); }

    std::optional<NodeContext<D>> Context(const NodeRef& ref) const {
        const D* data = Get(ref);
        if (!data) return std::nullopt;
        return NodeContext<D>{*data, ref.hash, ref.height};
    }

    const D& ChainAt(int height) const { return chain_[height]; }
    const Hash256& ChainHashAt(int height) const { return chain_hashes_[height]; }
    std::span<const Hash256> ChainHashes() const { return chain_hashes_; }

    std::optional<Parent> ParentOf(const NodeRef& ref) const {
        const auto resolved = Resolve(ref.height, ref.hash);
        if (!resolved) return std::nullopt;
        if (resolved->placement == Placement::Forest) return forest_.at(ref.hash).parent;
        if (ref.height == 0) return std::nullopt;
        return Parent{ref.height - 1};
    }

    util::Expected<NodeRef, ChainTreeError> AncestorAt(const NodeRef& tip, int height) const {
        auto current = Resolve(tip.height, tip.hash);
        if (!current) return ChainTreeError::UnknownLocation;
        if (height < 0 || height > current->height) return ChainTreeError::HeightOutOfRange;
        NodeRef ref = *current;
        while (ref.placement == Placement::Forest) {
            if (ref.height == height) return ref;
            const Parent& parent = forest_.at(ref.hash).parent;
            if (std::holds_alternative<int>(parent)) return ChainRef(height);
            const Hash256& parent_hash = std::get<Hash256>(parent);
            ref = NodeRef{Placement::Forest, ref.height - 1, parent_hash};
        }
        return ChainRef(height);
    }

    util::Expected<D, ChainTreeError> GetAncestorAtHeight(const NodeRef& tip, int height) const {
        const auto ref = AncestorAt(tip, height);
        if (!ref) return ref.error();
        return *Get(*ref);
    }

    // Swaps the branch ending at tip into the main chain. old_chain_hashes must list the
    // current main-chain hashes above the fork point.
    util::Expected<PromoteResult, ChainTreeError> PromoteBranch(const NodeRef& tip,
                                                                std::span<const Hash256> old_chain_hashes) {
        const auto it = forest_.find(tip.hash);
        if (it == forest_.end() || it->second.height != tip.height) return ChainTreeError::NotInForest;

        std::vector<Hash256> path{tip.hash};
        int fork_height = -1;
        for (const ForestNode* node = &it->second;;) {
            if (const int* chain_height = std::get_if<int>(&node->parent)) {
                fork_height = *chain_height;
                break;
            }
            const Hash256& parent_hash = std::get<Hash256>(node->parent);
            path.push_back(parent_hash);
            node = &forest_.at(parent_hash);
        }
        std::reverse(path.begin(), path.end());

        const auto suffix = std::span<const Hash256>(chain_hashes_).subspan(fork_height + 1);
        if (!std::equal(suffix.begin(), suffix.end(), old_chain_hashes.begin(), old_chain_hashes.end()))
            return ChainTreeError::StaleChainHashes;

        // Detach the displaced suffix along with any forks hanging from it.
        std::vector<D> demoted_data(std::make_move_iterator(chain_.begin() + fork_height + 1),
                                    std::make_move_iterator(chain_.end()));
        std::vector<Hash256> demoted(suffix.begin(), suffix.end());
        std::map<int, std::vector<Hash256>> displaced_roots;
        for (auto root_it = roots_.upper_bound(fork_height); root_it != roots_.end();)
            displaced_roots.insert(roots_.extract(root_it++));
        chain_.resize(fork_height + 1);
        chain_hashes_.resize(fork_height + 1);

        // Move the branch into the array; off-path children become forest roots.
        std::erase(roots_[fork_height], path.front());
        for (size_t i = 0; i < path.size(); ++i) {
            auto node = forest_.extract(path[i]);
            ForestNode& moved = node.mapped();
            const int height = moved.height;
            for (const Hash256& child : moved.children) {
                if (i + 1 < path.size() && child == path[i + 1]) continue;
                forest_.at(child).parent = height;
                roots_[height].push_back(child);
            }
            chain_.push_back(std::move(moved.data));
            chain_hashes_.push_back(path[i]);
        }

        // Turn the displaced suffix into a forest tree rooted at the fork point.
        for (size_t i = 0; i < demoted.size(); ++i) {
            const int height = fork_height + 1 + static_cast<int>(i);
            ForestNode node{std::move(demoted_data[i]), height, {}, {}};
            if (i == 0) {
                node.parent = fork_height;
                roots_[fork_height].push_back(demoted[i]);
            } else {
                node.parent = demoted[i - 1];
            }
            if (i + 1 < demoted.size()) node.children.push_back(demoted[i + 1]);
            if (const auto found = displaced_roots.find(height); found != displaced_roots.end()) {
                for (const Hash256& child : found->second) {
                    forest_.at(child).parent = demoted[i];
                    node.children.push_back(child);
                }
            }
            forest_.emplace(demoted[i], std::move(node));
        }
        PruneEmptyRoots();

        PromoteResult result{ChainRef(ChainLength() - 1), std::nullopt};
        if (!demoted.empty()) result.demoted_root = NodeRef{Placement::Forest, fork_height + 1, demoted.front()};
        PromoteEvent event{fork_height, std::move(path), std::move(demoted), result.new_tip};
        for (TreeObserver* observer : observers_) observer->OnPromote(event);
        return result;
    }

    util::Expected<size_t, ChainTreeError> EraseBranch(const NodeRef& root) {
        const auto it = forest_.find(root.hash);
        if (it == forest_.end() || it->second.height != root.height) return ChainTreeError::NotInForest;

        const Parent parent = it->second.parent;
        if (const int* chain_height = std::get_if<int>(&parent)) {
            std::erase(roots_[*chain_height], root.hash);
            PruneEmptyRoots();
        } else {
            std::erase(forest_.at(std::get<Hash256>(parent)).children, root.hash);
        }

        std::vector<Hash256> removed;
        std::vector<Hash256> pending{root.hash};
        while (!pending.empty()) {
            const Hash256 hash = pending.back();
            pending.pop_back();
            auto node = forest_.extract(hash);
            for (const Hash256& child : node.mapped().children) pending.push_back(child);
            removed.push_back(hash);
        }
        const size_t count = removed.size();
        EraseEvent event{root, std::move(removed)};
        for (TreeObserver* observer : observers_) observer->OnErase(event);
        return count;
    }

    std::vector<Hash256> ForestHashes() const override {
        std::vector<Hash256> out;
        out.reserve(forest_.size());
        for (const auto& [hash, node] : forest_) out.push_back(hash);
        return out;
    }

    // Every node in a deterministic order: the chain by height, then forest nodes by
    // (height, hash). Each entry carries the parent's hash when it has one.
    struct Entry {
        NodeRef ref;
        std::optional<Hash256> parent;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    std::vector<Entry> Enumerate() const {
        std::vector<Entry> out;
        out.reserve(Size());
        for (int h = 0; h < ChainLength(); ++h) {
            std::optional<Hash256> parent;
            if (h > 0) parent = chain_hashes_[h - 1];
            out.push_back({ChainRef(h), parent});
        }
        std::vector<Entry> forks;
        forks.reserve(forest_.size());
        for (const auto& [hash, node] : forest_) {
            const Hash256 parent = std::visit(
                [this](const auto& p) -> Hash256 {
                    if constexpr (std::is_same_v<std::decay_t<decltype(p)>, int>) return chain_hashes_[p];
                    else return p;
                },
                node.parent);
            forks.push_back({NodeRef{Placement::Forest, node.height, hash}, parent});
        }
        std::sort(forks.begin(), forks.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.ref.height, a.ref.hash) < std::tie(b.ref.height, b.ref.hash);
        });
        out.insert(out.end(), forks.begin(), forks.end());
        return out;
    }

    // One line per node: height, hash, placement, parent hash (or "-").
    std::string Dump() const {
        std::ostringstream out;
        for (const Entry& entry : Enumerate()) {
            out << entry.ref.height << ' ' << entry.ref.hash.ToString() << ' ' << ToString(entry.ref.placement) << ' '
                << (entry.parent ? entry.parent->ToString() : "-") << '\n';
        }
        return out.str();
    }

    // A tree with identical shape and keys whose payloads are all value.
    template <typename M>
    ChainTree<M> MirrorStructure(const M& value) const {
        ChainTree<M> mirror;
        mirror.chain_.assign(chain_.size(), value);
        mirror.chain_hashes_ = chain_hashes_;
        mirror.roots_ = roots_;
        for (const auto& [hash, node] : forest_)
            mirror.forest_.emplace(hash, typename ChainTree<M>::ForestNode{value, node.height, node.parent, node.children});
        return mirror;
    }

private:
    template <typename>
    friend class ChainTree;

    struct ForestNode {
        D data;
        int height = 0;
        Parent parent;
        std::vector<Hash256> children;
    };

    NodeRef ChainRef(int height) const { return NodeRef{Placement::Chain, height, chain_hashes_[height]}; }

    void PruneEmptyRoots() { std::erase_if(roots_, [](const auto& entry) { return entry.second.empty(); }); }

    NodeRef Notify(const AddEvent& event) {
        for (TreeObserver* observer : observers_) observer->OnAdd(event);
        return event.node;
    }

    std::vector<D> chain_;
    std::vector<Hash256> chain_hashes_;
    std::unordered_map<Hash256, ForestNode> forest_;
    std::map<int, std::vector<Hash256>> roots_;
    std::vector<TreeObserver*> observers_;
};

}  // namespace hornet::data
