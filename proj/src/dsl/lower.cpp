// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/dsl/lower.hpp"

#include <algorithm>

#include "hornet/util/check.hpp"

namespace hornet::dsl {

using namespace consensus;

LoweredRuleset Lower(const RuleDecl& decl, const RuleRegistry& registry) {
    LoweredRuleset lowered;
    lowered.name = decl.name;
    const auto domain = ParseErrorDomain(decl.return_type);
    HORNET_CHECK(domain.has_value());
    lowered.domain = *domain;
    if (const Annotation* phase = decl.FindAnnotation("phase"); phase && phase->arg) lowered.phase = *phase->arg;

    switch (lowered.domain) {
        case ErrorDomain::HeaderError: lowered.rules.emplace<0>(); break;
        case ErrorDomain::TransactionError: lowered.rules.emplace<1>(); break;
        case ErrorDomain::BlockOrTransactionError: lowered.rules.emplace<2>(); break;
        case ErrorDomain::BlockError: lowered.rules.emplace<3>(); break;
    }

    for (const RequireStatement& stmt : decl.body) {
        const RegistryEntry* entry = registry.Find(stmt.rule_name);
        HORNET_CHECK(entry && entry->domain == lowered.domain);
        std::optional<protocol::BIP> bip;
        if (stmt.bip_tag) {
            bip = protocol::ParseBip(*stmt.bip_tag);
            HORNET_CHECK(bip.has_value());
        }
        lowered.entries.push_back({stmt.rule_name, bip});
        std::visit(
            [&](auto& list) {
                using R = typename std::decay_t<decltype(list)>::value_type;
                list.push_back(R{std::get<typename R::Check>(entry->check), bip});
            },
            lowered.rules);
    }
    return lowered;
}

ValidationResult<HeaderError> Execute(const LoweredRuleset& ruleset, const HeaderValidationContext& context) {
    return ValidateRules<HeaderError>(ruleset.As<HeaderRule>(), context.height, context);
}

ValidationResult<TransactionError> Execute(const LoweredRuleset& ruleset, const TransactionValidationContext& context) {
    return ValidateRules<TransactionError>(ruleset.As<TransactionRule>(), 0, context);
}

ValidationResult<BlockOrTransactionError> Execute(const LoweredRuleset& ruleset, const BlockStructureContext& context) {
    return ValidateRules<BlockOrTransactionError>(ruleset.As<BlockStructureRule>(), 0, context);
}

ValidationResult<BlockError> Execute(const LoweredRuleset& ruleset, const BlockValidationContext& context) {
    return ValidateRules<BlockError>(ruleset.As<BlockContextRule>(), context.height, context);
}

CompileResult Compile(std::string_view source, const RuleRegistry& registry) {
    CompileResult result;
    ParseResult parsed = ParseSource(source);
    result.diagnostics = std::move(parsed.diagnostics);
    result.decls = std::move(parsed.decls);
    auto analysis = Analyze(result.decls, registry);
    result.diagnostics.insert(result.diagnostics.end(), analysis.begin(), analysis.end());
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.pos.offset < b.pos.offset; });
    if (!result.Ok()) return result;
    for (const RuleDecl& decl : result.decls) result.rulesets.push_back(Lower(decl, registry));
    return result;
}

}  // namespace hornet::dsl
