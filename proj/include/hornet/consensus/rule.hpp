// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <optional>
#include <span>

#include "hornet/protocol/bip.hpp"
#include "hornet/protocol/chain_params.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::consensus {

using protocol::BIP;
using protocol::ChainParams;

template <typename E>
using ValidationResult = util::Expected<void, E>;

inline bool IsBIPEnabledAtHeight(BIP bip, int height, const ChainParams& params) {
    return height >= params.ActivationHeight(bip);
}

// A pure check over a validation context, optionally gated on a BIP's activation height.
// An untagged rule applies at every height.
template <typename Context, typename E>
struct Rule {
    using Check = ValidationResult<E> (*)(const Context&);

    Check check = nullptr;
    std::optional<BIP> bip = std::nullopt;

    friend constexpr bool operator==(const Rule&, const Rule&) = default;
};

template <typename Context>
concept HasChainParams = requires(const Context& c) {
    { c.params } -> std::convertible_to<const ChainParams&>;
};

// Evaluates rules in order, skipping those whose BIP is not active at height, and returns
// the first error. No rule after the first failure is evaluated.
template <typename E, typename Context>
    requires HasChainParams<Context>
ValidationResult<E> ValidateRules(std::span<const Rule<Context, E>> ruleset, int height, const Context& context) {
    for (const auto& rule : ruleset) {
        if (rule.bip && !IsBIPEnabledAtHeight(*rule.bip, height, context.params)) continue;
        if (auto result = rule.check(context); !result) return result;
    }
    return {};
}

}  // namespace hornet::consensus
