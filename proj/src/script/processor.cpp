// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/script/processor.hpp"

#include <algorithm>

#include "hornet/script/script_num.hpp"

namespace hornet::script {

bool CastToBool(std::span<const uint8_t> element) {
    for (size_t i = 0; i < element.size(); ++i) {
        if (element[i] != 0) {
            // Negative zero.
            return !(i == element.size() - 1 && element[i] == 0x80);
        }
    }
    return false;
}

namespace runtime {

util::Expected<Element, ScriptError> Stack::Pop() {
    if (elements_.empty()) return ScriptError::StackUnderflow;
    Element top = std::move(elements_.back());
    elements_.pop_back();
    return top;
}

namespace {

using Result = util::Expected<void, ScriptError>;

template <typename F>
Result BinaryIntOp(const Context& context, F op) {
    Stack& stack = context.GetStack();
    if (stack.Size() < 2) return ScriptError::StackUnderflow;
    const Element rhs = *stack.Pop();
    const Element lhs = *stack.Pop();
    const auto b = DecodeScriptNum(rhs, kMaxOperandSize, context.RequiresMinimal());
    if (!b) return b.error() == ScriptError::OperandTooLarge ? ScriptError::NonCanonicalNumber : b.error();
    const auto a = DecodeScriptNum(lhs, kMaxOperandSize, context.RequiresMinimal());
    if (!a) return a.error() == ScriptError::OperandTooLarge ? ScriptError::NonCanonicalNumber : a.error();
    stack.Push(EncodeScriptNum(op(*a, *b)));
    return {};
}

template <typename F>
Result BinaryBitwiseOp(const Context& context, F op) {
    Stack& stack = context.GetStack();
    if (stack.Size() < 2) return ScriptError::StackUnderflow;
    const Element rhs = *stack.Pop();
    const Element lhs = *stack.Pop();
    stack.Push(op(lhs, rhs) ? Element{1} : Element{});
    return {};
}

// Op::Push0
Result OnPushEmpty(const Context& context) {
    context.GetStack().Push({});
    return {};
}

// Op::PushSize1 ... Op::PushData4
Result OnPushData(const Context& context) {
    if (context.RequiresMinimal() && !IsMinimalPush(context.instruction)) return ScriptError::NonMinimalPush;
    context.GetStack().Push(context.instruction.data);
    return {};
}

// Op::PushNeg1, Op::Push1 ... Op::Push16
Result OnPushSmallInt(const Context& context) {
    const int value = context.instruction.opcode == Op::PushNeg1 ? -1 : static_cast<int>(context.instruction.opcode) - 0x50;
    context.GetStack().Push(EncodeScriptNum(value));
    return {};
}

// Op::Add
Result OnAdd(const Context& context) {
    return BinaryIntOp(context, [](int64_t a, int64_t b) { return a + b; });
}

// Op::Equal
Result OnEqual(const Context& context) {
    return BinaryBitwiseOp(context, [](const auto& a, const auto& b) { return std::ranges::equal(a, b); });
}

std::array<Handler, 256> BuildTable() {
    std::array<Handler, 256> table{};
    table[static_cast<uint8_t>(Op::Push0)] = OnPushEmpty;
    for (int op = 0x01; op <= 0x4e; ++op) table[op] = OnPushData;
    table[static_cast<uint8_t>(Op::PushNeg1)] = OnPushSmallInt;
    for (int op = 0x51; op <= 0x60; ++op) table[op] = OnPushSmallInt;
    table[static_cast<uint8_t>(Op::Add)] = OnAdd;
    table[static_cast<uint8_t>(Op::Equal)] = OnEqual;
    return table;
}

}  // namespace

const std::array<Handler, 256>& HandlerTable() {
    static const std::array<Handler, 256> table = BuildTable();
    return table;
}

}  // namespace runtime

util::Expected<runtime::Stack, ScriptError> Processor::Execute() const {
    runtime::Stack stack;
    const auto& table = runtime::HandlerTable();
    size_t offset = 0;
    while (offset < script_.size()) {
        const auto decoded = DecodeInstruction(script_, offset);
        if (!decoded) return decoded.error();
        const runtime::Handler handler = table[static_cast<uint8_t>(decoded->instruction.opcode)];
        if (handler == nullptr) return ScriptError::UnknownOpcode;
        const runtime::Context context{stack, decoded->instruction, flags_};
        if (const auto result = handler(context); !result) return result.error();
        offset = decoded->next_offset;
    }
    return stack;
}

util::Expected<bool, ScriptError> Processor::Run() const {
    const auto stack = Execute();
    if (!stack) return stack.error();
    if (stack->Empty()) return ScriptError::EmptyStackFinal;
    return CastToBool(stack->Top());
}

}  // namespace hornet::script
