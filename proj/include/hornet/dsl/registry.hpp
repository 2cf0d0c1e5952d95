// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hornet/consensus/rulesets.hpp"

namespace hornet::dsl {

// The uniform error type a rule or ruleset reports, named as in DSL return types.
enum class ErrorDomain { HeaderError, TransactionError, BlockOrTransactionError, BlockError };

std::string_view ToString(ErrorDomain domain);
std::optional<ErrorDomain> ParseErrorDomain(std::string_view name);

inline constexpr std::string_view kPhases[] = {"header", "transaction", "block_structure", "block_context"};

bool IsKnownPhase(std::string_view phase);
std::string_view PhaseFor(ErrorDomain domain);

using RuleCheck = std::variant<consensus::HeaderRule::Check, consensus::TransactionRule::Check,
                               consensus::BlockStructureRule::Check, consensus::BlockContextRule::Check>;

struct RegistryEntry {
    std::string name;
    ErrorDomain domain = ErrorDomain::BlockError;
    std::vector<std::string> params;  // enclosing-rule parameters the rule reads
    RuleCheck check;
};

class RuleRegistry {
public:
    // Returns false if the name is already registered or the check disagrees with the domain.
    bool Register(RegistryEntry entry);

    const RegistryEntry* Find(std::string_view name) const;
    std::vector<std::string> Names() const;
    size_t Size() const { return entries_.size(); }

private:
    std::map<std::string, RegistryEntry, std::less<>> entries_;
};

// Every native consensus rule under its published name.
const RuleRegistry& NativeRegistry();

}  // namespace hornet::dsl
