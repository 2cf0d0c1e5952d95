// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornet/dsl/diagnostic.hpp"

namespace hornet::dsl {

enum class TokenKind { Keyword, Identifier, Annotation, Punctuation, String, Integer, Comment, End };

std::string_view ToString(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;  // exact source slice
    SourcePos pos;

    // Annotations only: the name after '@' and the optional parenthesized argument.
    std::string annotation_name;
    std::optional<std::string> annotation_arg;
    bool annotation_arg_is_string = false;

    bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

inline constexpr std::string_view kKeywords[] = {"rule", "require", "mut", "struct", "serialize"};
inline constexpr std::string_view kReservedKeywords[] = {"mut", "struct", "serialize"};

bool IsKeyword(std::string_view word);
bool IsReservedKeyword(std::string_view word);

struct LexResult {
    std::vector<Token> tokens;  // always ends with an End token
    std::vector<Diagnostic> diagnostics;
};

LexResult Lex(std::string_view source);

}  // namespace hornet::dsl
