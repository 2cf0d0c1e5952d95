// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <span>
#include <vector>

#include "hornet/dsl/ast.hpp"
#include "hornet/dsl/diagnostic.hpp"
#include "hornet/dsl/registry.hpp"

namespace hornet::dsl {

// Static checks; a result without errors means every declaration can be lowered.
std::vector<Diagnostic> Analyze(std::span<const RuleDecl> decls, const RuleRegistry& registry);

}  // namespace hornet::dsl
