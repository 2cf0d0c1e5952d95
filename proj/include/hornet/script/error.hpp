// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <string_view>

namespace hornet::script {

enum class ScriptError {
    EmptyStackFinal,
    StackUnderflow,
    NonMinimalPush,
    NonCanonicalNumber,
    OperandTooLarge,
    TruncatedPush,
    UnknownOpcode,
};

std::string_view ToString(ScriptError error);

}  // namespace hornet::script
