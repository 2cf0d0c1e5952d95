// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hornet/consensus/rulesets.hpp"
#include "hornet/dsl/analyzer.hpp"
#include "hornet/dsl/ast.hpp"
#include "hornet/dsl/parser.hpp"
#include "hornet/dsl/registry.hpp"

namespace hornet::dsl {

struct LoweredRule {
    std::string name;
    std::optional<protocol::BIP> bip;

    friend bool operator==(const LoweredRule&, const LoweredRule&) = default;
};

using RuleList = std::variant<std::vector<consensus::HeaderRule>, std::vector<consensus::TransactionRule>,
                              std::vector<consensus::BlockStructureRule>, std::vector<consensus::BlockContextRule>>;

// A declaration bound to executable rules, in source order.
struct LoweredRuleset {
    std::string name;
    ErrorDomain domain = ErrorDomain::BlockError;
    std::optional<std::string> phase;
    std::vector<LoweredRule> entries;
    RuleList rules;

    template <typename R>
    std::span<const R> As() const {
        if (const auto* list = std::get_if<std::vector<R>>(&rules)) return *list;
        return {};
    }

    // Rule-for-rule and tag-for-tag equality with a native ruleset.
    template <typename R>
    bool Matches(std::span<const R> native) const {
        const auto mine = As<R>();
        return std::holds_alternative<std::vector<R>>(rules) && std::equal(mine.begin(), mine.end(), native.begin(), native.end());
    }
};

// Requires Analyze to have reported no errors for decl.
LoweredRuleset Lower(const RuleDecl& decl, const RuleRegistry& registry);

// The early-exit evaluation each native ruleset performs, at the same height argument.
consensus::ValidationResult<consensus::HeaderError> Execute(const LoweredRuleset& ruleset,
                                                            const consensus::HeaderValidationContext& context);
consensus::ValidationResult<consensus::TransactionError> Execute(const LoweredRuleset& ruleset,
                                                                 const consensus::TransactionValidationContext& context);
consensus::ValidationResult<consensus::BlockOrTransactionError> Execute(const LoweredRuleset& ruleset,
                                                                        const consensus::BlockStructureContext& context);
consensus::ValidationResult<consensus::BlockError> Execute(const LoweredRuleset& ruleset,
                                                           const consensus::BlockValidationContext& context);

// Lex, parse, analyze and lower a whole source file.
struct CompileResult {
    std::vector<RuleDecl> decls;
    std::vector<Diagnostic> diagnostics;
    std::vector<LoweredRuleset> rulesets;  // empty when diagnostics contain errors

    bool Ok() const { return !HasErrors(diagnostics); }
};

CompileResult Compile(std::string_view source, const RuleRegistry& registry = NativeRegistry());

template <typename Context>
struct CorpusItem {
    std::string id;
    const Context* context = nullptr;
};

struct Mismatch {
    std::string id;
    std::string native;
    std::string lowered;
};

struct DifferentialReport {
    size_t checked = 0;
    std::vector<Mismatch> mismatches;

    bool Passed() const { return mismatches.empty(); }
};

template <typename E>
std::string Verdict(const consensus::ValidationResult<E>& result) {
    if (result) return "ok";
    return std::string(consensus::ToString(result.error()));
}

// Runs the lowered ruleset and a native ruleset over every corpus item and lists disagreements.
template <typename Context, typename E>
DifferentialReport DifferentialCheck(const LoweredRuleset& lowered,
                                     std::span<const consensus::Rule<Context, E>> native,
                                     std::span<const CorpusItem<Context>> corpus) {
    DifferentialReport report;
    for (const auto& item : corpus) {
        const Context& context = *item.context;
        int height = 0;
        if constexpr (requires { context.height; }) height = context.height;
        const auto expected = consensus::ValidateRules<E>(native, height, context);
        const auto actual = Execute(lowered, context);
        ++report.checked;
        if (!(expected == actual)) report.mismatches.push_back({item.id, Verdict(expected), Verdict(actual)});
    }
    return report;
}

}  // namespace hornet::dsl
