// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/consensus/block_checks.hpp"

#include <algorithm>

#include "hornet/protocol/hashing.hpp"
#include "hornet/script/instruction.hpp"
#include "hornet/script/script_num.hpp"

namespace hornet::consensus {

using protocol::Block;
using protocol::Hash256;
using protocol::Transaction;
using script::Op;

int CountScriptSigOps(std::span<const uint8_t> script) {
    int count = 0;
    size_t offset = 0;
    while (offset < script.size()) {
        const auto decoded = script::DecodeInstruction(script, offset);
        if (!decoded) break;
        const Op op = decoded->instruction.opcode;
        if (op == Op::CheckSig || op == Op::CheckSigVerify) {
            count += 1;
        } else if (op == Op::CheckMultiSig || op == Op::CheckMultiSigVerify) {
            count += 20;
        }
        offset = decoded->next_offset;
    }
    return count;
}

int CountBlockSigOps(const Block& block) {
    int count = 0;
    for (const Transaction& tx : block.transactions) {
        for (const auto& in : tx.inputs) count += CountScriptSigOps(in.script_sig);
        for (const auto& out : tx.outputs) count += CountScriptSigOps(out.script_pubkey);
    }
    return count;
}

bool IsFinalTransaction(const Transaction& tx, int height, int64_t block_time, uint32_t locktime_threshold) {
    if (tx.locktime == 0) return true;
    const int64_t cutoff = tx.locktime < locktime_threshold ? int64_t{height} : block_time;
    if (int64_t{tx.locktime} < cutoff) return true;
    return std::all_of(tx.inputs.begin(), tx.inputs.end(),
                       [](const auto& in) { return in.sequence == protocol::TxInput::kFinalSequence; });
}

std::vector<std::vector<uint8_t>> CoinbaseHeightPrefixes(int height) {
    std::vector<std::vector<uint8_t>> prefixes;
    if (height == 0) {
        prefixes.push_back({static_cast<uint8_t>(Op::Push0)});
    } else if (height >= 1 && height <= 16) {
        prefixes.push_back({static_cast<uint8_t>(script::PushSmallInt(height))});
        prefixes.push_back({0x01, static_cast<uint8_t>(height)});
    } else {
        const auto encoded = script::EncodeScriptNum(height);
        std::vector<uint8_t> push{static_cast<uint8_t>(encoded.size())};
        push.insert(push.end(), encoded.begin(), encoded.end());
        prefixes.push_back(std::move(push));
    }
    return prefixes;
}

ValidationResult<BlockError> CheckCoinbaseHeight(const Block& block, int height) {
    if (block.transactions.empty() || block.transactions[0].inputs.empty()) return BlockError::BadCoinbaseHeight;
    const auto& script_sig = block.transactions[0].inputs[0].script_sig;
    for (const auto& prefix : CoinbaseHeightPrefixes(height)) {
        if (script_sig.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), script_sig.begin()))
            return {};
    }
    return BlockError::BadCoinbaseHeight;
}

Hash256 WitnessMerkleRoot(const Block& block) {
    std::vector<Hash256> leaves;
    leaves.reserve(block.transactions.size());
    for (size_t i = 0; i < block.transactions.size(); ++i) {
        leaves.push_back(i == 0 ? Hash256{} : protocol::Wtxid(block.transactions[i]));
    }
    return *protocol::MerkleRoot(leaves);
}

Hash256 WitnessCommitment(const Hash256& witness_root, std::span<const uint8_t> reserved_value) {
    std::vector<uint8_t> buffer(witness_root.Bytes().begin(), witness_root.Bytes().end());
    buffer.insert(buffer.end(), reserved_value.begin(), reserved_value.end());
    return protocol::DoubleSha256(buffer);
}

int FindWitnessCommitment(const Block& block) {
    if (block.transactions.empty()) return -1;
    const auto& outputs = block.transactions[0].outputs;
    for (int i = static_cast<int>(outputs.size()) - 1; i >= 0; --i) {
        const auto& script = outputs[i].script_pubkey;
        if (script.size() >= kWitnessCommitmentPrefix.size() + Hash256::kSize &&
            std::equal(kWitnessCommitmentPrefix.begin(), kWitnessCommitmentPrefix.end(), script.begin()))
            return i;
    }
    return -1;
}

ValidationResult<BlockError> CheckWitnessCommitment(const Block& block) {
    const int index = FindWitnessCommitment(block);
    if (index < 0) {
        const bool any_witness = std::any_of(block.transactions.begin(), block.transactions.end(),
                                             [](const Transaction& tx) { return tx.HasWitness(); });
        if (any_witness) return BlockError::BadWitnessCommitment;
        return {};
    }
    const auto& coinbase_inputs = block.transactions[0].inputs;
    if (coinbase_inputs.empty()) return BlockError::BadWitnessCommitment;
    const auto& witness = coinbase_inputs[0].witness;
    if (witness.size() != 1 || witness[0].size() != Hash256::kSize) return BlockError::BadWitnessCommitment;

    const Hash256 expected = WitnessCommitment(WitnessMerkleRoot(block), witness[0]);
    const auto& script = block.transactions[0].outputs[index].script_pubkey;
    if (!std::equal(expected.Bytes().begin(), expected.Bytes().end(),
                    script.begin() + kWitnessCommitmentPrefix.size()))
        return BlockError::BadWitnessCommitment;
    return {};
}

}  // namespace hornet::consensus
