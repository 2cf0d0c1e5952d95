// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/dsl/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace hornet::dsl {

std::string_view ToString(Severity severity) { return severity == Severity::Error ? "error" : "warning"; }

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string Format(std::string_view file, const Diagnostic& diagnostic) {
    std::ostringstream out;
    out << file << ':' << diagnostic.pos.line << ':' << diagnostic.pos.column << ": " << ToString(diagnostic.severity)
        << '[' << diagnostic.code << "]: " << diagnostic.message;
    return out.str();
}

}  // namespace hornet::dsl
