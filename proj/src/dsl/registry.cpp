// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/dsl/registry.hpp"

#include <algorithm>

namespace hornet::dsl {

using namespace consensus;

std::string_view ToString(ErrorDomain domain) {
    switch (domain) {
        case ErrorDomain::HeaderError: return "HeaderError";
        case ErrorDomain::TransactionError: return "TransactionError";
        case ErrorDomain::BlockOrTransactionError: return "BlockOrTransactionError";
        case ErrorDomain::BlockError: return "BlockError";
    }
    return "Unknown";
}

std::optional<ErrorDomain> ParseErrorDomain(std::string_view name) {
    for (auto domain : {ErrorDomain::HeaderError, ErrorDomain::TransactionError, ErrorDomain::BlockOrTransactionError,
                        ErrorDomain::BlockError}) {
        if (ToString(domain) == name) return domain;
    }
    return std::nullopt;
}

bool IsKnownPhase(std::string_view phase) {
    return std::find(std::begin(kPhases), std::end(kPhases), phase) != std::end(kPhases);
}

std::string_view PhaseFor(ErrorDomain domain) { return kPhases[static_cast<size_t>(domain)]; }

bool RuleRegistry::Register(RegistryEntry entry) {
    if (entry.check.index() != static_cast<size_t>(entry.domain)) return false;
    const std::string name = entry.name;
    return entries_.emplace(name, std::move(entry)).second;
}

const RegistryEntry* RuleRegistry::Find(std::string_view name) const {
    const auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> RuleRegistry::Names() const {
    std::vector<std::string> names;
    for (const auto& [name, entry] : entries_) names.push_back(name);
    return names;
}

namespace {

using Params = std::vector<std::string>;

// Parameters of the enclosing declaration each native rule consumes.
const std::map<std::string_view, Params>& ParamTable() {
    static const std::map<std::string_view, Params> table = {
        {"ValidatePreviousHash", {"header", "parent"}},
        {"ValidateProofOfWork", {"header"}},
        {"ValidateDifficultyAdjustment", {"header", "parent", "ancestry"}},
        {"ValidateMedianTimePast", {"header", "ancestry"}},
        {"ValidateTimestampCurrent", {"header", "current_time"}},
        {"ValidateVersion", {"header", "parent"}},
        {"ValidateInputCount", {"transaction"}},
        {"ValidateOutputCount", {"transaction"}},
        {"ValidateTransactionSize", {"transaction"}},
        {"ValidateOutputValues", {"transaction"}},
        {"ValidateUniqueInputs", {"transaction"}},
        {"ValidateCoinbaseSignatureSize", {"transaction"}},
        {"ValidateInputsPrevout", {"transaction"}},
        {"ValidateNonEmpty", {"block"}},
        {"ValidateMerkleRoot", {"block"}},
        {"ValidateOriginalSizeLimit", {"block"}},
        {"ValidateCoinbase", {"block"}},
        {"ValidateTransactions", {"block"}},
        {"ValidateSignatureOps", {"block"}},
        {"ValidateTransactionFinality", {"block", "height", "past_timestamps"}},
        {"ValidateCoinbaseHeight", {"block", "height"}},
        {"ValidateWitnessCommitment", {"block"}},
        {"ValidateBlockWeight", {"block"}},
    };
    return table;
}

RuleRegistry BuildNative() {
    RuleRegistry registry;
    const auto add = [&](const auto& rules, ErrorDomain domain) {
        for (const auto& named : rules) {
            RuleCheck check = named.rule.check;
            registry.Register({std::string(named.name), domain, ParamTable().at(named.name), check});
        }
    };
    add(HeaderRules(), ErrorDomain::HeaderError);
    add(TransactionRules(), ErrorDomain::TransactionError);
    add(BlockStructureRules(), ErrorDomain::BlockOrTransactionError);
    add(BlockContextRules(), ErrorDomain::BlockError);
    return registry;
}

}  // namespace

const RuleRegistry& NativeRegistry() {
    static const RuleRegistry registry = BuildNative();
    return registry;
}

}  // namespace hornet::dsl
