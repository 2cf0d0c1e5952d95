// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hornet::dsl {

// 1-based line and column plus the 0-based byte offset.
struct SourcePos {
    int line = 1;
    int column = 1;
    size_t offset = 0;
};

enum class Severity { Error, Warning };

std::string_view ToString(Severity severity);

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourcePos pos;
};

bool HasErrors(const std::vector<Diagnostic>& diagnostics);

// "file:line:col: severity[code]: message"
std::string Format(std::string_view file, const Diagnostic& diagnostic);

}  // namespace hornet::dsl
