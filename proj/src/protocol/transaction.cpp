// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/protocol/transaction.hpp"

#include <algorithm>

#include "hornet/protocol/hashing.hpp"

namespace hornet::protocol {

bool Transaction::HasWitness() const {
    return std::any_of(inputs.begin(), inputs.end(), [](const TxInput& in) { return !in.witness.empty(); });
}

void SerializeTransaction(Writer& writer, const Transaction& tx, WitnessMode mode) {
    const bool extended = mode == WitnessMode::Include && tx.HasWitness();
    writer.I32(tx.version);
    if (extended) writer.U8(0x00).U8(0x01);
    writer.CompactSize(tx.inputs.size());
    for (const TxInput& in : tx.inputs) {
        writer.Hash(in.prevout.txid).U32(in.prevout.index).VarBytes(in.script_sig).U32(in.sequence);
    }
    writer.CompactSize(tx.outputs.size());
    for (const TxOutput& out : tx.outputs) writer.I64(out.value).VarBytes(out.script_pubkey);
    if (extended) {
        for (const TxInput& in : tx.inputs) {
            writer.CompactSize(in.witness.size());
            for (const Bytes& item : in.witness) writer.VarBytes(item);
        }
    }
    writer.U32(tx.locktime);
}

Bytes SerializeTransaction(const Transaction& tx, WitnessMode mode) {
    Writer writer;
    SerializeTransaction(writer, tx, mode);
    return writer.Release();
}

namespace {
util::Expected<std::vector<TxInput>, ParseError> ParseInputs(Reader& reader, uint64_t count) {
    std::vector<TxInput> inputs;
    inputs.reserve(std::min<uint64_t>(count, 4096));
    for (uint64_t i = 0; i < count; ++i) {
        TxInput in;
        const auto txid = reader.Hash();
        if (!txid) return txid.error();
        const auto index = reader.U32();
        if (!index) return index.error();
        auto script = reader.VarBytes();
        if (!script) return script.error();
        const auto sequence = reader.U32();
        if (!sequence) return sequence.error();
        in.prevout = {*txid, *index};
        in.script_sig = std::move(*script);
        in.sequence = *sequence;
        inputs.push_back(std::move(in));
    }
    return inputs;
}

util::Expected<std::vector<TxOutput>, ParseError> ParseOutputs(Reader& reader) {
    const auto count = reader.CompactSize();
    if (!count) return count.error();
    std::vector<TxOutput> outputs;
    outputs.reserve(std::min<uint64_t>(*count, 4096));
    for (uint64_t i = 0; i < *count; ++i) {
        const auto value = reader.I64();
        if (!value) return value.error();
        auto script = reader.VarBytes();
        if (!script) return script.error();
        outputs.push_back({*value, std::move(*script)});
    }
    return outputs;
}
}  // namespace

util::Expected<Transaction, ParseError> ParseTransaction(Reader& reader) {
    Transaction tx;
    const auto version = reader.I32();
    if (!version) return version.error();
    tx.version = *version;

    auto input_count = reader.CompactSize();
    if (!input_count) return input_count.error();
    bool extended = false;
    if (*input_count == 0) {
        // Marker byte seen; the next byte is the flag.
        const auto flag = reader.U8();
        if (!flag) return flag.error();
        if (*flag != 0x01) return ParseError::Truncated;
        extended = true;
        input_count = reader.CompactSize();
        if (!input_count) return input_count.error();
    }
    auto inputs = ParseInputs(reader, *input_count);
    if (!inputs) return inputs.error();
    tx.inputs = std::move(*inputs);
    auto outputs = ParseOutputs(reader);
    if (!outputs) return outputs.error();
    tx.outputs = std::move(*outputs);

    if (extended) {
        for (TxInput& in : tx.inputs) {
            const auto items = reader.CompactSize();
            if (!items) return items.error();
            for (uint64_t i = 0; i < *items; ++i) {
                auto item = reader.VarBytes();
                if (!item) return item.error();
                in.witness.push_back(std::move(*item));
            }
        }
    }
    const auto locktime = reader.U32();
    if (!locktime) return locktime.error();
    tx.locktime = *locktime;
    return tx;
}

util::Expected<Transaction, ParseError> ParseTransaction(std::span<const uint8_t> bytes) {
    Reader reader{bytes};
    auto tx = ParseTransaction(reader);
    if (tx && reader.Remaining() != 0) return ParseError::TrailingBytes;
    return tx;
}

size_t SerializedSize(const Transaction& tx, WitnessMode mode) {
    const bool extended = mode == WitnessMode::Include && tx.HasWitness();
    size_t size = 4 + 4 + CompactSizeLength(tx.inputs.size()) + CompactSizeLength(tx.outputs.size());
    if (extended) size += 2;
    for (const TxInput& in : tx.inputs) {
        size += 32 + 4 + CompactSizeLength(in.script_sig.size()) + in.script_sig.size() + 4;
        if (extended) {
            size += CompactSizeLength(in.witness.size());
            for (const Bytes& item : in.witness) size += CompactSizeLength(item.size()) + item.size();
        }
    }
    for (const TxOutput& out : tx.outputs) {
        size += 8 + CompactSizeLength(out.script_pubkey.size()) + out.script_pubkey.size();
    }
    return size;
}

Hash256 Txid(const Transaction& tx) { return DoubleSha256(SerializeTransaction(tx, WitnessMode::Exclude)); }

Hash256 Wtxid(const Transaction& tx) { return DoubleSha256(SerializeTransaction(tx, WitnessMode::Include)); }

}  // namespace hornet::protocol
