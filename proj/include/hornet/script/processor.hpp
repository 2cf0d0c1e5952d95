// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hornet/script/error.hpp"
#include "hornet/script/instruction.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::script {

struct ExecutionFlags {
    bool requires_minimal = false;
};

// Bitcoin Script truthiness: false for empty, all-zero, or all-zero with a 0x80 terminal byte.
bool CastToBool(std::span<const uint8_t> element);

namespace runtime {

using Element = std::vector<uint8_t>;

// Operand stack; top at the end.
class Stack {
public:
    void Push(Element element) { elements_.push_back(std::move(element)); }
    util::Expected<Element, ScriptError> Pop();
    size_t Size() const { return elements_.size(); }
    bool Empty() const { return elements_.empty(); }
    const Element& Top() const { return elements_.back(); }
    const std::vector<Element>& Elements() const { return elements_; }

private:
    std::vector<Element> elements_;
};

// Everything an opcode handler may read or write.
class Context {
public:
    Context(Stack& stack, const Instruction& instruction, ExecutionFlags flags)
        : instruction(instruction), stack_(stack), flags_(flags) {}

    const Instruction& instruction;

    Stack& GetStack() const { return stack_; }
    bool RequiresMinimal() const { return flags_.requires_minimal; }

private:
    Stack& stack_;
    ExecutionFlags flags_;
};

using Handler = util::Expected<void, ScriptError> (*)(const Context&);

// Dispatch table indexed by opcode byte; null entries are unknown opcodes.
const std::array<Handler, 256>& HandlerTable();

}  // namespace runtime

class Processor {
public:
    explicit Processor(std::span<const uint8_t> script, ExecutionFlags flags = {}) : script_(script), flags_(flags) {}

    // Runs to completion and returns the truthiness of the top stack element.
    util::Expected<bool, ScriptError> Run() const;

    // Runs to completion and returns the final stack.
    util::Expected<runtime::Stack, ScriptError> Execute() const;

private:
    std::span<const uint8_t> script_;
    ExecutionFlags flags_;
};

}  // namespace hornet::script
