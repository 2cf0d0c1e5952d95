// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/script/instruction.hpp"

#include <sstream>

namespace hornet::script {

std::string_view ToString(ScriptError error) {
    switch (error) {
        case ScriptError::EmptyStackFinal: return "EmptyStackFinal";
        case ScriptError::StackUnderflow: return "StackUnderflow";
        case ScriptError::NonMinimalPush: return "NonMinimalPush";
        case ScriptError::NonCanonicalNumber: return "NonCanonicalNumber";
        case ScriptError::OperandTooLarge: return "OperandTooLarge";
        case ScriptError::TruncatedPush: return "TruncatedPush";
        case ScriptError::UnknownOpcode: return "UnknownOpcode";
    }
    return "Unknown";
}

std::string OpName(Op op) {
    const int byte = static_cast<int>(op);
    if (op == Op::Push0) return "Push0";
    if (byte >= 0x01 && byte <= 0x4b) return "PushSize" + std::to_string(byte);
    if (byte >= 0x51 && byte <= 0x60) return "Push" + std::to_string(byte - 0x50);
    switch (op) {
        case Op::PushData1: return "PushData1";
        case Op::PushData2: return "PushData2";
        case Op::PushData4: return "PushData4";
        case Op::PushNeg1: return "PushNeg1";
        case Op::Equal: return "Equal";
        case Op::Add: return "Add";
        case Op::CheckSig: return "CheckSig";
        case Op::CheckSigVerify: return "CheckSigVerify";
        case Op::CheckMultiSig: return "CheckMultiSig";
        case Op::CheckMultiSigVerify: return "CheckMultiSigVerify";
        default: break;
    }
    std::ostringstream out;
    out << "0x" << std::hex << byte;
    return out.str();
}

util::Expected<Decoded, ScriptError> DecodeInstruction(std::span<const uint8_t> script, size_t offset) {
    const Op op = static_cast<Op>(script[offset]);
    size_t cursor = offset + 1;
    size_t length = 0;
    if (op >= Op::PushSize1 && op <= Op::PushSize75) {
        length = static_cast<size_t>(op);
    } else if (op >= Op::PushData1 && op <= Op::PushData4) {
        const size_t width = op == Op::PushData1 ? 1 : op == Op::PushData2 ? 2 : 4;
        if (script.size() - cursor < width) return ScriptError::TruncatedPush;
        for (size_t i = 0; i < width; ++i) length |= static_cast<size_t>(script[cursor + i]) << (8 * i);
        cursor += width;
    }
    if (script.size() - cursor < length) return ScriptError::TruncatedPush;
    Decoded decoded;
    decoded.instruction.opcode = op;
    decoded.instruction.data.assign(script.begin() + cursor, script.begin() + cursor + length);
    decoded.next_offset = cursor + length;
    return decoded;
}

util::Expected<std::vector<Instruction>, ScriptError> DecodeScript(std::span<const uint8_t> script) {
    std::vector<Instruction> out;
    size_t offset = 0;
    while (offset < script.size()) {
        auto decoded = DecodeInstruction(script, offset);
        if (!decoded) return decoded.error();
        out.push_back(std::move(decoded->instruction));
        offset = decoded->next_offset;
    }
    return out;
}

bool IsMinimalPush(const Instruction& instruction) {
    const auto& data = instruction.data;
    const Op op = instruction.opcode;
    if (data.empty()) return op == Op::Push0;
    if (data.size() == 1 && data[0] >= 1 && data[0] <= 16) return op == PushSmallInt(data[0]);
    if (data.size() == 1 && data[0] == 0x81) return op == Op::PushNeg1;
    if (data.size() <= 75) return op == PushSize(static_cast<int>(data.size()));
    if (data.size() <= 0xff) return op == Op::PushData1;
    if (data.size() <= 0xffff) return op == Op::PushData2;
    return true;
}

}  // namespace hornet::script
