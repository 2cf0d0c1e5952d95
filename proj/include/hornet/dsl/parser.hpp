// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hornet/dsl/ast.hpp"
#include "hornet/dsl/diagnostic.hpp"
#include "hornet/dsl/lexer.hpp"

namespace hornet::dsl {

// Declarations that failed to parse are omitted; their errors are in diagnostics.
struct ParseResult {
    std::vector<RuleDecl> decls;
    std::vector<Diagnostic> diagnostics;
};

ParseResult Parse(std::span<const Token> tokens);

// Lexes then parses.
ParseResult ParseSource(std::string_view source);

// Canonical source text; parsing it yields a structurally equal AST.
std::string Print(std::span<const RuleDecl> decls);
std::string Print(const TypeExpr& type);

}  // namespace hornet::dsl
