// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/dsl/parser.hpp"

#include <charconv>
#include <sstream>

namespace hornet::dsl {
namespace {

struct SyntaxError {};

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    ParseResult Run() {
        while (!AtEnd()) {
            const size_t start = index_;
            try {
                result_.decls.push_back(ParseRuleDecl());
            } catch (const SyntaxError&) {
                Synchronize(start);
            }
        }
        return std::move(result_);
    }

private:
    const Token& Current() const { return tokens_[index_]; }
    bool AtEnd() const { return Current().kind == TokenKind::End; }
    const Token& Take() { return tokens_[AtEnd() ? index_ : index_++]; }

    bool CheckPunct(std::string_view text) const { return Current().Is(TokenKind::Punctuation, text); }
    bool CheckKeyword(std::string_view text) const { return Current().Is(TokenKind::Keyword, text); }

    [[noreturn]] void Fail(const SourcePos& pos, std::string code, std::string message) {
        result_.diagnostics.push_back({Severity::Error, std::move(code), std::move(message), pos});
        throw SyntaxError{};
    }

    [[noreturn]] void Expected(std::string_view what) {
        const Token& t = Current();
        const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
        Fail(t.pos, "parse.expected-token", "expected " + std::string(what) + ", found " + found);
    }

    void RejectReserved() {
        const Token& t = Current();
        if (t.kind == TokenKind::Keyword && IsReservedKeyword(t.text))
            Fail(t.pos, "parse.unsupported", "'" + t.text + "' declarations are not yet supported");
    }

    const Token& ExpectPunct(std::string_view text) {
        if (!CheckPunct(text)) Expected("'" + std::string(text) + "'");
        return Take();
    }

    const Token& ExpectIdent(std::string_view what) {
        RejectReserved();
        if (Current().kind != TokenKind::Identifier) Expected(what);
        return Take();
    }

    // Collects consecutive comment lines as a description. A blank line starts a new block.
    std::vector<std::string> TakeComments() {
        std::vector<std::string> lines;
        int last_line = -1;
        while (Current().kind == TokenKind::Comment) {
            const Token& token = Take();
            if (last_line >= 0 && token.pos.line > last_line + 1) lines.clear();
            last_line = token.pos.line;
            std::string_view text = token.text;
            text.remove_prefix(2);
            if (!text.empty() && text.front() == ' ') text.remove_prefix(1);
            while (!text.empty() && (text.back() == ' ' || text.back() == '\r' || text.back() == '\t'))
                text.remove_suffix(1);
            lines.emplace_back(text);
        }
        return lines;
    }

    void SkipComments() {
        while (Current().kind == TokenKind::Comment) ++index_;
    }

    RuleDecl ParseRuleDecl() {
        RuleDecl decl;
        decl.description = TakeComments();
        while (Current().kind == TokenKind::Annotation || Current().kind == TokenKind::Comment) {
            if (Current().kind == TokenKind::Comment) {
                ++index_;
                continue;
            }
            const Token& t = Take();
            decl.annotations.push_back({t.annotation_name, t.annotation_arg, t.annotation_arg_is_string, t.pos});
        }
        RejectReserved();
        if (!CheckKeyword("rule")) Expected("'rule'");
        decl.pos = Take().pos;
        SkipComments();
        decl.name = ExpectIdent("rule name").text;
        SkipComments();
        ExpectPunct("(");
        SkipComments();
        if (!CheckPunct(")")) {
            decl.params.push_back(ParseParam());
            SkipComments();
            while (CheckPunct(",")) {
                Take();
                SkipComments();
                decl.params.push_back(ParseParam());
                SkipComments();
            }
        }
        ExpectPunct(")");
        SkipComments();
        ExpectPunct("->");
        SkipComments();
        const Token& ret = ExpectIdent("error type");
        decl.return_type = ret.text;
        decl.return_pos = ret.pos;
        SkipComments();
        if (CheckPunct("?")) {
            Take();
            decl.optional_return = true;
        }
        SkipComments();
        ExpectPunct("{");
        while (true) {
            auto description = TakeComments();
            if (CheckPunct("}")) break;
            decl.body.push_back(ParseStatement(std::move(description)));
        }
        ExpectPunct("}");
        return decl;
    }

    Param ParseParam() {
        Param param;
        const Token& name = ExpectIdent("parameter name");
        param.name = name.text;
        param.pos = name.pos;
        SkipComments();
        ExpectPunct(":");
        SkipComments();
        param.type = ParseType();
        return param;
    }

    TypeExpr ParseType() {
        TypeExpr type;
        type.name = ExpectIdent("type name").text;
        SkipComments();
        if (!CheckPunct("<")) return type;
        Take();
        SkipComments();
        type.args.push_back(ParseTypeArg());
        SkipComments();
        while (CheckPunct(",")) {
            Take();
            SkipComments();
            type.args.push_back(ParseTypeArg());
            SkipComments();
        }
        ExpectPunct(">");
        return type;
    }

    TypeExpr ParseTypeArg() {
        if (Current().kind != TokenKind::Integer) return ParseType();
        const Token& t = Take();
        int64_t value = 0;
        const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || end != t.text.data() + t.text.size())
            Fail(t.pos, "parse.bad-integer", "integer literal out of range");
        TypeExpr type;
        type.integer = value;
        return type;
    }

    RequireStatement ParseStatement(std::vector<std::string> description) {
        RequireStatement stmt;
        stmt.description = std::move(description);
        stmt.pos = Current().pos;
        if (Current().kind == TokenKind::Annotation) {
            const Token& t = Take();
            if (t.annotation_name != "bip")
                Fail(t.pos, "parse.misplaced-annotation",
                     "annotation '@" + t.annotation_name + "' is not allowed on a statement");
            if (!t.annotation_arg || t.annotation_arg_is_string)
                Fail(t.pos, "parse.expected-token", "expected a BIP identifier in '@bip(...)'");
            stmt.bip_tag = t.annotation_arg;
            stmt.bip_pos = t.pos;
            SkipComments();
        }
        RejectReserved();
        if (!CheckKeyword("require")) Expected("'require'");
        Take();
        SkipComments();
        const Token& name = ExpectIdent("rule name after 'require'");
        stmt.rule_name = name.text;
        stmt.rule_pos = name.pos;
        return stmt;
    }

    // Skips to the next 'rule' keyword, keeping the annotations and comments just before it.
    void Synchronize(size_t failed_at) {
        if (index_ == failed_at) ++index_;
        while (!AtEnd() && !CheckKeyword("rule")) ++index_;
        if (AtEnd()) return;
        while (index_ > failed_at + 1) {
            const TokenKind previous = tokens_[index_ - 1].kind;
            if (previous != TokenKind::Annotation && previous != TokenKind::Comment) break;
            --index_;
        }
    }

    std::span<const Token> tokens_;
    size_t index_ = 0;
    ParseResult result_;
};

}  // namespace

ParseResult Parse(std::span<const Token> tokens) {
    if (tokens.empty() || tokens.back().kind != TokenKind::End) {
        ParseResult result;
        result.diagnostics.push_back({Severity::Error, "parse.expected-token", "token stream is not terminated", {}});
        return result;
    }
    return Parser(tokens).Run();
}

ParseResult ParseSource(std::string_view source) {
    LexResult lexed = Lex(source);
    ParseResult parsed = Parse(lexed.tokens);
    lexed.diagnostics.insert(lexed.diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
    parsed.diagnostics = std::move(lexed.diagnostics);
    return parsed;
}

std::string Print(const TypeExpr& type) {
    if (type.integer) return std::to_string(*type.integer);
    std::string out = type.name;
    if (!type.args.empty()) {
        out += '<';
        for (size_t i = 0; i < type.args.size(); ++i) {
            if (i) out += ", ";
            out += Print(type.args[i]);
        }
        out += '>';
    }
    return out;
}

namespace {

void PrintComments(std::ostringstream& out, const std::vector<std::string>& lines, std::string_view indent) {
    for (const auto& line : lines) {
        out << indent << "//";
        if (!line.empty()) out << ' ' << line;
        out << '\n';
    }
}

}  // namespace

std::string Print(std::span<const RuleDecl> decls) {
    std::ostringstream out;
    for (size_t d = 0; d < decls.size(); ++d) {
        const RuleDecl& decl = decls[d];
        if (d) out << '\n';
        PrintComments(out, decl.description, "");
        for (size_t i = 0; i < decl.annotations.size(); ++i) {
            const Annotation& a = decl.annotations[i];
            out << (i ? " @" : "@") << a.name;
            if (a.arg) out << '(' << (a.arg_is_string ? "\"" + *a.arg + "\"" : *a.arg) << ')';
        }
        if (!decl.annotations.empty()) out << '\n';
        out << "rule " << decl.name << '(';
        for (size_t i = 0; i < decl.params.size(); ++i) {
            if (i) out << ",\n    ";
            out << decl.params[i].name << ": " << Print(decl.params[i].type);
        }
        out << ")\n    -> " << decl.return_type << (decl.optional_return ? "?" : "") << " {\n";
        for (const RequireStatement& stmt : decl.body) {
            PrintComments(out, stmt.description, "    ");
            out << "    ";
            if (stmt.bip_tag) out << "@bip(" << *stmt.bip_tag << ") ";
            out << "require " << stmt.rule_name << '\n';
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace hornet::dsl
