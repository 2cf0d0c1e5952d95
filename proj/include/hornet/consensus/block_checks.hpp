// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hornet/consensus/errors.hpp"
#include "hornet/consensus/rule.hpp"
#include "hornet/protocol/block.hpp"

namespace hornet::consensus {

inline constexpr size_t kMaxBlockBaseSize = 1'000'000;
inline constexpr size_t kMaxTransactionBaseSize = 1'000'000;
inline constexpr size_t kMaxBlockWeight = 4'000'000;
inline constexpr size_t kMinCoinbaseScriptSize = 2;
inline constexpr size_t kMaxCoinbaseScriptSize = 100;

// OP_RETURN, push-36, then the commitment header 0xaa21a9ed.
inline constexpr std::array<uint8_t, 6> kWitnessCommitmentPrefix = {0x6a, 0x24, 0xaa, 0x21, 0xa9, 0xed};

// Legacy sigop count of one script: CheckSig/CheckSigVerify count 1, the multisig
// opcodes count 20. Push payloads are skipped; counting stops at a truncated push.
int CountScriptSigOps(std::span<const uint8_t> script);

// Sum of CountScriptSigOps over every script_sig and script_pubkey in the block.
int CountBlockSigOps(const protocol::Block& block);

// Final iff locktime is 0, every input sequence is final, or the locktime (height- or
// time-typed per locktime_threshold) lies strictly before height / time.
bool IsFinalTransaction(const protocol::Transaction& tx, int height, int64_t block_time,
                        uint32_t locktime_threshold = 500'000'000);

// Script prefixes accepted as a push of height. Heights 1..16 admit both the small-integer
// opcode and an explicit one-byte push.
std::vector<std::vector<uint8_t>> CoinbaseHeightPrefixes(int height);

ValidationResult<BlockError> CheckCoinbaseHeight(const protocol::Block& block, int height);

// Merkle root over wtxids with the coinbase's entry replaced by 32 zero bytes.
protocol::Hash256 WitnessMerkleRoot(const protocol::Block& block);

// DoubleSha256(witness_root || reserved_value).
protocol::Hash256 WitnessCommitment(const protocol::Hash256& witness_root, std::span<const uint8_t> reserved_value);

// Index of the last coinbase output carrying a witness commitment, or -1.
int FindWitnessCommitment(const protocol::Block& block);

ValidationResult<BlockError> CheckWitnessCommitment(const protocol::Block& block);

}  // namespace hornet::consensus
