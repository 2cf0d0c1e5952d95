// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/dsl/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace hornet::dsl {
namespace {

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
public:
    explicit Lexer(std::string_view source) : source_(source) {}

    LexResult Run() {
        while (true) {
            SkipWhitespace();
            if (AtEnd()) break;
            const SourcePos start = pos_;
            const char c = Peek();
            if (c == '/' && PeekAt(1) == '/') {
                while (!AtEnd() && Peek() != '\n') Advance();
                Emit(TokenKind::Comment, start);
            } else if (c == '@') {
                LexAnnotation(start);
            } else if (IsIdentStart(c)) {
                while (!AtEnd() && IsIdentChar(Peek())) Advance();
                const auto word = Slice(start);
                Emit(IsKeyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start);
            } else if (IsDigit(c)) {
                while (!AtEnd() && IsDigit(Peek())) Advance();
                Emit(TokenKind::Integer, start);
            } else if (c == '"') {
                LexString(start);
            } else if (c == '-' && PeekAt(1) == '>') {
                Advance();
                Advance();
                Emit(TokenKind::Punctuation, start);
            } else if (std::string_view("(){},:<>?").find(c) != std::string_view::npos) {
                Advance();
                Emit(TokenKind::Punctuation, start);
            } else {
                Advance();
                Error(start, "lex.illegal-char", "illegal character " + Describe(c));
            }
        }
        result_.tokens.push_back(Token{TokenKind::End, "", pos_, {}, {}, false});
        return std::move(result_);
    }

private:
    bool AtEnd() const { return pos_.offset >= source_.size(); }
    char Peek() const { return source_[pos_.offset]; }
    char PeekAt(size_t k) const { return pos_.offset + k < source_.size() ? source_[pos_.offset + k] : '\0'; }

    void Advance() {
        if (source_[pos_.offset] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++pos_.offset;
    }

    void SkipWhitespace() {
        while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) Advance();
    }

    std::string_view Slice(const SourcePos& start) const {
        return source_.substr(start.offset, pos_.offset - start.offset);
    }

    Token& Emit(TokenKind kind, const SourcePos& start) {
        result_.tokens.push_back(Token{kind, std::string(Slice(start)), start, {}, {}, false});
        return result_.tokens.back();
    }

    void Error(const SourcePos& pos, std::string code, std::string message) {
        result_.diagnostics.push_back({Severity::Error, std::move(code), std::move(message), pos});
    }

    static std::string Describe(char c) {
        const auto byte = static_cast<unsigned char>(c);
        if (std::isprint(byte)) return std::string("'") + c + "'";
        static constexpr char kHex[] = "0123456789abcdef";
        return std::string("0x") + kHex[byte >> 4] + kHex[byte & 0xf];
    }

    void LexString(const SourcePos& start) {
        Advance();
        while (!AtEnd() && Peek() != '"' && Peek() != '\n') Advance();
        if (AtEnd() || Peek() != '"') {
            Error(start, "lex.unterminated-string", "unterminated string literal");
            return;
        }
        Advance();
        Emit(TokenKind::String, start);
    }

    void LexAnnotation(const SourcePos& start) {
        Advance();
        if (AtEnd() || !IsIdentStart(Peek())) {
            Error(start, "lex.bad-annotation", "expected annotation name after '@'");
            return;
        }
        const size_t name_begin = pos_.offset;
        while (!AtEnd() && IsIdentChar(Peek())) Advance();
        std::string name(source_.substr(name_begin, pos_.offset - name_begin));
        std::optional<std::string> arg;
        bool arg_is_string = false;
        if (!AtEnd() && Peek() == '(') {
            Advance();
            SkipWhitespace();
            const size_t arg_begin = pos_.offset;
            if (!AtEnd() && Peek() == '"') {
                Advance();
                while (!AtEnd() && Peek() != '"' && Peek() != '\n') Advance();
                if (AtEnd() || Peek() != '"') {
                    Error(start, "lex.unterminated-string", "unterminated string in annotation argument");
                    return;
                }
                Advance();
                arg = std::string(source_.substr(arg_begin + 1, pos_.offset - arg_begin - 2));
                arg_is_string = true;
            } else {
                while (!AtEnd() && IsIdentChar(Peek())) Advance();
                arg = std::string(source_.substr(arg_begin, pos_.offset - arg_begin));
                if (arg->empty()) {
                    Error(start, "lex.bad-annotation", "expected annotation argument");
                    return;
                }
            }
            SkipWhitespace();
            if (AtEnd() || Peek() != ')') {
                Error(start, "lex.bad-annotation", "expected ')' to close annotation argument");
                return;
            }
            Advance();
        }
        Token& token = Emit(TokenKind::Annotation, start);
        token.annotation_name = std::move(name);
        token.annotation_arg = std::move(arg);
        token.annotation_arg_is_string = arg_is_string;
    }

    std::string_view source_;
    SourcePos pos_;
    LexResult result_;
};

}  // namespace

std::string_view ToString(TokenKind kind) {
    switch (kind) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Annotation: return "annotation";
        case TokenKind::Punctuation: return "punctuation";
        case TokenKind::String: return "string";
        case TokenKind::Integer: return "integer";
        case TokenKind::Comment: return "comment";
        case TokenKind::End: return "end";
    }
    return "unknown";
}

bool IsKeyword(std::string_view word) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

bool IsReservedKeyword(std::string_view word) {
    return std::find(std::begin(kReservedKeywords), std::end(kReservedKeywords), word) != std::end(kReservedKeywords);
}

LexResult Lex(std::string_view source) { return Lexer(source).Run(); }

}  // namespace hornet::dsl
