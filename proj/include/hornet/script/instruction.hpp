// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hornet/script/error.hpp"
#include "hornet/script/opcodes.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::script {

using Script = std::vector<uint8_t>;

struct Instruction {
    Op opcode = Op::Push0;
    std::vector<uint8_t> data;  // empty for non-push opcodes

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Decoded {
    Instruction instruction;
    size_t next_offset = 0;
};

// Push opcodes yield their payload; PushData1/2/4 read a little-endian length first.
// Errors: TruncatedPush when the declared length overruns the script.
util::Expected<Decoded, ScriptError> DecodeInstruction(std::span<const uint8_t> script, size_t offset);

// Decodes the whole script, stopping at the first error.
util::Expected<std::vector<Instruction>, ScriptError> DecodeScript(std::span<const uint8_t> script);

// True if the push used the shortest opcode able to express its payload.
bool IsMinimalPush(const Instruction& instruction);

}  // namespace hornet::script
