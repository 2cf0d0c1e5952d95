// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hornet/protocol/hash.hpp"
#include "hornet/protocol/serialize.hpp"

namespace hornet::protocol {

using Bytes = std::vector<uint8_t>;

struct OutPoint {
    static constexpr uint32_t kNullIndex = 0xffffffff;

    Hash256 txid;
    uint32_t index = 0;

    static OutPoint Null() { return {Hash256{}, kNullIndex}; }
    bool IsNull() const { return index == kNullIndex && txid.IsNull(); }

    friend bool operator==(const OutPoint&, const OutPoint&) = default;
};

struct TxInput {
    static constexpr uint32_t kFinalSequence = 0xffffffff;

    OutPoint prevout;
    Bytes script_sig;
    uint32_t sequence = kFinalSequence;
    std::vector<Bytes> witness;

    friend bool operator==(const TxInput&, const TxInput&) = default;
};

struct TxOutput {
    int64_t value = 0;
    Bytes script_pubkey;

    friend bool operator==(const TxOutput&, const TxOutput&) = default;
};

struct Transaction {
    int32_t version = 1;
    std::vector<TxInput> inputs;
    std::vector<TxOutput> outputs;
    uint32_t locktime = 0;

    // Exactly one input, and that input spends the null outpoint.
    bool IsCoinbase() const { return inputs.size() == 1 && inputs[0].prevout.IsNull(); }
    bool HasWitness() const;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

enum class WitnessMode { Exclude, Include };

void SerializeTransaction(Writer& writer, const Transaction& tx, WitnessMode mode);
Bytes SerializeTransaction(const Transaction& tx, WitnessMode mode);

// Accepts both the legacy and the marker/flag extended encoding. A transaction with zero
// inputs is ambiguous with the extended marker and cannot round-trip through this format.
util::Expected<Transaction, ParseError> ParseTransaction(Reader& reader);
util::Expected<Transaction, ParseError> ParseTransaction(std::span<const uint8_t> bytes);

size_t SerializedSize(const Transaction& tx, WitnessMode mode);

// Hash of the serialization without witness data.
Hash256 Txid(const Transaction& tx);
// Hash of the serialization with witness data; equals Txid for witness-free transactions.
Hash256 Wtxid(const Transaction& tx);

}  // namespace hornet::protocol
