// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>

#include "hornet/script/instruction.hpp"

namespace hornet::script {

// Fluent script builder; every push is emitted in its minimal form.
class Writer {
public:
    Writer& PushInt(int64_t value);
    Writer& PushData(std::span<const uint8_t> data);
    Writer& Then(Op op);

    Script Release() { return std::move(script_); }

private:
    Script script_;
};

}  // namespace hornet::script
