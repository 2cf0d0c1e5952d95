// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "hornet/data/chain_tree.hpp"
#include "hornet/data/keyframe_sidecar.hpp"
#include "hornet/data/sidecar.hpp"

namespace hornet::data {

// A ChainTree guarded by one reader/writer lock that also covers every registered
// sidecar. Mutations run exclusively; reads share.
template <typename D>
class Timechain {
public:
    Timechain() = default;
    Timechain(const Timechain&) = delete;
    Timechain& operator=(const Timechain&) = delete;

    template <typename F>
    decltype(auto) Write(F&& fn) {
        std::unique_lock lock(mutex_);
        return std::forward<F>(fn)(tree_);
    }

    template <typename F>
    decltype(auto) Read(F&& fn) const {
        std::shared_lock lock(mutex_);
        return std::forward<F>(fn)(std::as_const(tree_));
    }

    std::shared_mutex& Mutex() const { return mutex_; }

    // Caller must hold the lock.
    ChainTree<D>& UnsafeTree() { return tree_; }

private:
    mutable std::shared_mutex mutex_;
    ChainTree<D> tree_;
};

// Owns a sidecar registered with a timechain for the binding's lifetime. The binding
// must not outlive the timechain.
template <typename D, typename S>
class BasicBinding {
public:
    using Value = decltype(std::declval<const S&>().Get(0, Hash256{}))::value_type;

    BasicBinding(const BasicBinding&) = delete;
    BasicBinding& operator=(const BasicBinding&) = delete;

    ~BasicBinding() {
        std::unique_lock lock(timechain_->Mutex());
        timechain_->UnsafeTree().RemoveObserver(sidecar_.get());
    }

    util::Expected<void, ChainTreeError> Set(int height, const Hash256& hash, Value value) {
        std::unique_lock lock(timechain_->Mutex());
        return sidecar_->Set(height, hash, std::move(value));
    }

    std::optional<Value> Get(int height, const Hash256& hash) const {
        std::shared_lock lock(timechain_->Mutex());
        return sidecar_->Get(height, hash);
    }

    // Runs fn on the sidecar under a shared lock.
    template <typename F>
    decltype(auto) Inspect(F&& fn) const {
        std::shared_lock lock(timechain_->Mutex());
        return std::forward<F>(fn)(std::as_const(*sidecar_));
    }

protected:
    BasicBinding(Timechain<D>& timechain, std::unique_ptr<S> sidecar)
        : timechain_(&timechain), sidecar_(std::move(sidecar)) {}

    template <typename Binding, typename Make>
    static std::unique_ptr<Binding> Register(Timechain<D>& timechain, Make&& make) {
        std::unique_lock lock(timechain.Mutex());
        auto sidecar = std::forward<Make>(make)(timechain.UnsafeTree());
        timechain.UnsafeTree().AddObserver(sidecar.get());
        return std::unique_ptr<Binding>(new Binding(timechain, std::move(sidecar)));
    }

private:
    Timechain<D>* timechain_;
    std::unique_ptr<S> sidecar_;
};

template <typename D, typename M>
class SidecarBinding final : public BasicBinding<D, Sidecar<M>> {
public:
    static std::unique_ptr<SidecarBinding> Create(Timechain<D>& timechain, M default_value = M{}) {
        return Base::template Register<SidecarBinding>(timechain, [&](const ChainTree<D>& tree) {
            return std::make_unique<Sidecar<M>>(tree, default_value);
        });
    }

private:
    using Base = BasicBinding<D, Sidecar<M>>;
    friend Base;
    using Base::Base;
};

template <typename D, typename M>
class KeyframeBinding final : public BasicBinding<D, KeyframeSidecar<M>> {
public:
    static std::unique_ptr<KeyframeBinding> Create(Timechain<D>& timechain, M default_value = M{}) {
        return Base::template Register<KeyframeBinding>(timechain, [&](const ChainTree<D>& tree) {
            return std::make_unique<KeyframeSidecar<M>>(tree, default_value);
        });
    }

private:
    using Base = BasicBinding<D, KeyframeSidecar<M>>;
    friend Base;
    using Base::Base;
};

}  // namespace hornet::data
