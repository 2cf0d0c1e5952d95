// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <string>

namespace hornet::script {

// Single-byte opcodes. Only the push family, Add and Equal are executable; the
// signature opcodes are listed for sigop counting.
enum class Op : uint8_t {
    Push0 = 0x00,
    PushSize1 = 0x01,
    PushSize75 = 0x4b,
    PushData1 = 0x4c,
    PushData2 = 0x4d,
    PushData4 = 0x4e,
    PushNeg1 = 0x4f,
    Push1 = 0x51,
    Push16 = 0x60,
    Equal = 0x87,
    Add = 0x93,
    CheckSig = 0xac,
    CheckSigVerify = 0xad,
    CheckMultiSig = 0xae,
    CheckMultiSigVerify = 0xaf,
};

constexpr Op PushSize(int n) { return static_cast<Op>(n); }  // 1..75
constexpr Op PushSmallInt(int n) { return static_cast<Op>(0x50 + n); }  // 1..16

constexpr bool IsDataPush(Op op) { return op >= Op::PushSize1 && op <= Op::PushData4; }
constexpr bool IsPush(Op op) { return op <= Op::Push16 && op != static_cast<Op>(0x50); }

std::string OpName(Op op);

}  // namespace hornet::script
