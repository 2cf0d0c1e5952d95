// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/dsl/analyzer.hpp"

#include <algorithm>
#include <set>

#include "hornet/protocol/bip.hpp"

namespace hornet::dsl {
namespace {

class Analyzer {
public:
    explicit Analyzer(const RuleRegistry& registry) : registry_(registry) {}

    std::vector<Diagnostic> Run(std::span<const RuleDecl> decls) {
        std::set<std::string, std::less<>> names;
        for (const RuleDecl& decl : decls) {
            if (!names.insert(decl.name).second)
                Error(decl.pos, "analyze.duplicate-rule", "rule '" + decl.name + "' is declared more than once");
            Check(decl);
        }
        return std::move(diagnostics_);
    }

private:
    void Error(const SourcePos& pos, std::string code, std::string message) {
        diagnostics_.push_back({Severity::Error, std::move(code), std::move(message), pos});
    }
    void Warn(const SourcePos& pos, std::string code, std::string message) {
        diagnostics_.push_back({Severity::Warning, std::move(code), std::move(message), pos});
    }

    void CheckAnnotations(const RuleDecl& decl) {
        for (const Annotation& a : decl.annotations) {
            if (a.name == "rule") continue;
            if (a.name == "phase") {
                if (!a.arg) {
                    Error(a.pos, "analyze.unknown-phase", "'@phase' requires a phase label");
                } else if (!IsKnownPhase(*a.arg)) {
                    Error(a.pos, "analyze.unknown-phase", "unknown phase '" + *a.arg + "'");
                }
            } else if (a.name == "bip") {
                Error(a.pos, "analyze.misplaced-annotation", "'@bip' applies to require statements, not rules");
            } else {
                Warn(a.pos, "analyze.unknown-annotation", "unknown annotation '@" + a.name + "' is ignored");
            }
        }
    }

    void Check(const RuleDecl& decl) {
        CheckAnnotations(decl);

        const auto domain = ParseErrorDomain(decl.return_type);
        if (!domain) Error(decl.return_pos, "analyze.unknown-domain", "unknown error type '" + decl.return_type + "'");
        if (decl.body.empty()) Error(decl.pos, "analyze.empty-body", "rule '" + decl.name + "' has no requirements");

        std::set<std::string, std::less<>> declared;
        for (const Param& p : decl.params) {
            if (!declared.insert(p.name).second)
                Error(p.pos, "analyze.duplicate-param", "parameter '" + p.name + "' is declared more than once");
        }

        std::set<std::string, std::less<>> required;
        std::set<std::string, std::less<>> used;
        for (const RequireStatement& stmt : decl.body) {
            if (stmt.bip_tag && !protocol::ParseBip(*stmt.bip_tag))
                Error(stmt.bip_pos, "analyze.unknown-bip", "unknown BIP '" + *stmt.bip_tag + "'");
            if (!required.insert(stmt.rule_name).second)
                Error(stmt.rule_pos, "analyze.duplicate-require",
                      "'" + stmt.rule_name + "' is required more than once in '" + decl.name + "'");

            const RegistryEntry* entry = registry_.Find(stmt.rule_name);
            if (!entry) {
                Error(stmt.rule_pos, "analyze.unknown-rule", "unknown rule '" + stmt.rule_name + "'");
                continue;
            }
            if (domain && entry->domain != *domain)
                Error(stmt.rule_pos, "analyze.mixed-domain",
                      "'" + stmt.rule_name + "' reports " + std::string(ToString(entry->domain)) + " but '" +
                          decl.name + "' returns " + decl.return_type + "; a ruleset needs uniform error types");
            for (const std::string& param : entry->params) {
                used.insert(param);
                if (!declared.contains(param))
                    Error(stmt.rule_pos, "analyze.missing-param",
                          "'" + stmt.rule_name + "' needs parameter '" + param + "', which '" + decl.name +
                              "' does not declare");
            }
        }
        for (const Param& p : decl.params) {
            if (!used.contains(p.name))
                Warn(p.pos, "analyze.unused-param", "parameter '" + p.name + "' is not used by any required rule");
        }
    }

    const RuleRegistry& registry_;
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::vector<Diagnostic> Analyze(std::span<const RuleDecl> decls, const RuleRegistry& registry) {
    return Analyzer(registry).Run(decls);
}

}  // namespace hornet::dsl
