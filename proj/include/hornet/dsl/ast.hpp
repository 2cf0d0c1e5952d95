// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hornet/dsl/diagnostic.hpp"

namespace hornet::dsl {

// Equality on AST nodes is structural and ignores source positions.

struct Annotation {
    std::string name;
    std::optional<std::string> arg;
    bool arg_is_string = false;
    SourcePos pos;

    friend bool operator==(const Annotation& a, const Annotation& b) {
        return a.name == b.name && a.arg == b.arg && a.arg_is_string == b.arg_is_string;
    }
};

// IDENT [ "<" type_arg { "," type_arg } ">" ]; an integer argument has an empty name.
struct TypeExpr {
    std::string name;
    std::optional<int64_t> integer;
    std::vector<TypeExpr> args;

    friend bool operator==(const TypeExpr&, const TypeExpr&) = default;
};

struct Param {
    std::string name;
    TypeExpr type;
    SourcePos pos;

    friend bool operator==(const Param& a, const Param& b) { return a.name == b.name && a.type == b.type; }
};

struct RequireStatement {
    std::string rule_name;
    std::optional<std::string> bip_tag;
    std::vector<std::string> description;  // preceding comment lines without the "//" marker
    SourcePos pos;
    SourcePos rule_pos;
    SourcePos bip_pos;

    friend bool operator==(const RequireStatement& a, const RequireStatement& b) {
        return a.rule_name == b.rule_name && a.bip_tag == b.bip_tag && a.description == b.description;
    }
};

struct RuleDecl {
    std::string name;
    std::vector<Param> params;
    std::string return_type;
    bool optional_return = false;
    std::vector<Annotation> annotations;
    std::vector<RequireStatement> body;
    std::vector<std::string> description;
    SourcePos pos;
    SourcePos return_pos;

    const Annotation* FindAnnotation(std::string_view annotation) const {
        for (const auto& a : annotations)
            if (a.name == annotation) return &a;
        return nullptr;
    }

    friend bool operator==(const RuleDecl& a, const RuleDecl& b) {
        return a.name == b.name && a.params == b.params && a.return_type == b.return_type &&
               a.optional_return == b.optional_return && a.annotations == b.annotations && a.body == b.body &&
               a.description == b.description;
    }
};

}  // namespace hornet::dsl
