// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/consensus/rulesets.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "hornet/consensus/block_checks.hpp"
#include "hornet/consensus/difficulty.hpp"

namespace hornet::consensus {

using protocol::Block;
using protocol::OutPoint;
using protocol::Transaction;
using protocol::WitnessMode;

namespace rules {

namespace detail {
bool IsVersionValidAtHeight(int32_t version, int height, const ChainParams& params) {
    constexpr std::array<BIP, 4> kVersionExpiryToBIP = {
        BIP::HeightInCoinbase, BIP::HeightInCoinbase,  // v0, v1 retired with BIP34.
        BIP::StrictDER,                                // v2 retired with BIP66.
        BIP::CheckLockTimeVerify                       // v3 retired with BIP65.
    };
    if (version >= static_cast<int32_t>(kVersionExpiryToBIP.size())) return true;
    const int index = std::max(0, version);
    return !IsBIPEnabledAtHeight(kVersionExpiryToBIP[index], height, params);
}

struct OutPointHasher {
    size_t operator()(const OutPoint& p) const noexcept {
        return protocol::Hash256Hasher{}(p.txid) ^ (size_t{p.index} * 0x9e3779b97f4a7c15ull);
    }
};
}  // namespace detail

// A header MUST reference the hash of its valid parent.
ValidationResult<HeaderError> ValidatePreviousHash(const HeaderValidationContext& context) {
    if (context.parent.hash != context.header.previous_block_hash) return HeaderError::ParentNotFound;
    return {};
}

// A header's 256-bit hash value MUST NOT exceed the header's proof-of-work target.
ValidationResult<HeaderError> ValidateProofOfWork(const HeaderValidationContext& context) {
    const auto target = context.header.bits.Expand();
    if (!target) return HeaderError::InvalidProofOfWork;
    if (protocol::UInt256::FromHash(context.header.ComputeHash()) > *target) return HeaderError::InvalidProofOfWork;
    return {};
}

// A header's proof-of-work target MUST satisfy the difficulty adjustment formula.
ValidationResult<HeaderError> ValidateDifficultyAdjustment(const HeaderValidationContext& context) {
    if (context.params.allow_min_difficulty) {
        const auto minimum = protocol::CompactTarget::Compress(context.params.pow_limit);
        if (minimum && context.header.bits == *minimum) return {};
    }
    const auto required = AdjustCompactTarget(context.height, context.parent.data, context.view, context.params);
    if (!required || context.header.bits != *required) return HeaderError::BadDifficultyTransition;
    return {};
}

// A header timestamp MUST be strictly greater than the median of its 11 ancestors' timestamps.
ValidationResult<HeaderError> ValidateMedianTimePast(const HeaderValidationContext& context) {
    if (int64_t{context.header.timestamp} <= context.view.MedianTimePast()) return HeaderError::TimestampTooEarly;
    return {};
}

// A header timestamp MUST be less than or equal to network-adjusted time plus 2 hours.
ValidationResult<HeaderError> ValidateTimestampCurrent(const HeaderValidationContext& context) {
    if (int64_t{context.header.timestamp} > context.current_time + context.params.timestamp_tolerance)
        return HeaderError::TimestampTooLate;
    return {};
}

// A header version number MUST meet deployment requirements depending on activated BIPs.
ValidationResult<HeaderError> ValidateVersion(const HeaderValidationContext& context) {
    if (!detail::IsVersionValidAtHeight(context.header.version, context.height, context.params))
        return HeaderError::BadVersion;
    return {};
}

// A transaction MUST contain at least one input.
ValidationResult<TransactionError> ValidateInputCount(const TransactionValidationContext& context) {
    if (context.transaction.inputs.empty()) return TransactionError::NoInputs;
    return {};
}

// A transaction MUST contain at least one output.
ValidationResult<TransactionError> ValidateOutputCount(const TransactionValidationContext& context) {
    if (context.transaction.outputs.empty()) return TransactionError::NoOutputs;
    return {};
}

// A transaction's serialized size (excluding witness data) MUST NOT exceed 1,000,000 bytes.
ValidationResult<TransactionError> ValidateTransactionSize(const TransactionValidationContext& context) {
    if (protocol::SerializedSize(context.transaction, WitnessMode::Exclude) > kMaxTransactionBaseSize)
        return TransactionError::OversizedTransaction;
    return {};
}

// All output values MUST be non-negative, and their sum MUST NOT exceed 21,000,000 coins.
ValidationResult<TransactionError> ValidateOutputValues(const TransactionValidationContext& context) {
    const int64_t max_money = context.params.max_money;
    int64_t total = 0;
    for (const auto& out : context.transaction.outputs) {
        if (out.value < 0 || out.value > max_money) return TransactionError::BadOutputValue;
        total += out.value;
        if (total > max_money) return TransactionError::BadOutputValue;
    }
    return {};
}

// A transaction's inputs MUST reference distinct outpoints (no duplicates).
ValidationResult<TransactionError> ValidateUniqueInputs(const TransactionValidationContext& context) {
    const auto& inputs = context.transaction.inputs;
    std::unordered_set<OutPoint, detail::OutPointHasher> seen;
    seen.reserve(inputs.size());
    for (const auto& in : inputs) {
        if (!seen.insert(in.prevout).second) return TransactionError::DuplicateInputs;
    }
    return {};
}

// In a coinbase transaction, the scriptSig MUST be between 2 and 100 bytes inclusive.
ValidationResult<TransactionError> ValidateCoinbaseSignatureSize(const TransactionValidationContext& context) {
    if (!context.transaction.IsCoinbase()) return {};
    const size_t size = context.transaction.inputs[0].script_sig.size();
    if (size < kMinCoinbaseScriptSize || size > kMaxCoinbaseScriptSize) return TransactionError::BadCoinbaseScriptSize;
    return {};
}

// A non-coinbase transaction's inputs MUST have non-null prevout values.
ValidationResult<TransactionError> ValidateInputsPrevout(const TransactionValidationContext& context) {
    if (context.transaction.IsCoinbase()) return {};
    for (const auto& in : context.transaction.inputs) {
        if (in.prevout.IsNull()) return TransactionError::NullPrevout;
    }
    return {};
}

// A block MUST contain at least one transaction.
ValidationResult<BlockOrTransactionError> ValidateNonEmpty(const BlockStructureContext& context) {
    if (context.block.transactions.empty()) return BlockOrTransactionError{BlockError::EmptyBlock};
    return {};
}

// A block's Merkle root field MUST equal the Merkle root of its transaction list.
ValidationResult<BlockOrTransactionError> ValidateMerkleRoot(const BlockStructureContext& context) {
    std::vector<protocol::Hash256> txids;
    txids.reserve(context.block.transactions.size());
    for (const Transaction& tx : context.block.transactions) txids.push_back(protocol::Txid(tx));
    const auto root = protocol::MerkleRoot(txids);
    if (!root || *root != context.block.header.merkle_root) return BlockOrTransactionError{BlockError::BadMerkleRoot};
    return {};
}

// A block's serialized size (before SegWit) MUST NOT exceed 1,000,000 bytes.
ValidationResult<BlockOrTransactionError> ValidateOriginalSizeLimit(const BlockStructureContext& context) {
    if (protocol::SerializedSize(context.block, WitnessMode::Exclude) > kMaxBlockBaseSize)
        return BlockOrTransactionError{BlockError::OversizedBlock};
    return {};
}

// A block MUST contain exactly one coinbase transaction, and it MUST be the first transaction.
ValidationResult<BlockOrTransactionError> ValidateCoinbase(const BlockStructureContext& context) {
    const auto& txs = context.block.transactions;
    if (txs.empty() || !txs[0].IsCoinbase()) return BlockOrTransactionError{BlockError::BadCoinbase};
    if (std::any_of(txs.begin() + 1, txs.end(), [](const Transaction& tx) { return tx.IsCoinbase(); }))
        return BlockOrTransactionError{BlockError::BadCoinbase};
    return {};
}

// All transactions in a block MUST be valid according to transaction-level consensus rules.
ValidationResult<BlockOrTransactionError> ValidateTransactions(const BlockStructureContext& context) {
    const auto& txs = context.block.transactions;
    for (size_t i = 0; i < txs.size(); ++i) {
        if (const auto result = ValidateTransaction(txs[i], context.params); !result)
            return BlockOrTransactionError{TransactionFailure{i, result.error()}};
    }
    return {};
}

// The total number of signature operations in a block MUST NOT exceed the consensus maximum.
ValidationResult<BlockOrTransactionError> ValidateSignatureOps(const BlockStructureContext& context) {
    if (CountBlockSigOps(context.block) > context.params.max_block_sigops) return BlockOrTransactionError{BlockError::TooManySigOps};
    return {};
}

// All transactions in the block MUST be final given the block height and locktime rules.
ValidationResult<BlockError> ValidateTransactionFinality(const BlockValidationContext& context) {
    const int64_t block_time = IsBIPEnabledAtHeight(BIP::MedianTimePastLocktime, context.height, context.params)
                                   ? context.ancestry.MedianTimePast()
                                   : int64_t{context.block.header.timestamp};
    for (const Transaction& tx : context.block.transactions) {
        if (!IsFinalTransaction(tx, context.height, block_time, context.params.locktime_threshold))
            return BlockError::NonFinalTransaction;
    }
    return {};
}

// From BIP34, the coinbase transaction's scriptSig MUST begin by pushing the block height.
ValidationResult<BlockError> ValidateCoinbaseHeight(const BlockValidationContext& context) {
    return CheckCoinbaseHeight(context.block, context.height);
}

// From BIP141, the coinbase transaction MUST include a valid witness commitment
// for blocks containing witness data.
ValidationResult<BlockError> ValidateWitnessCommitment(const BlockValidationContext& context) {
    return CheckWitnessCommitment(context.block);
}

// A block's total weight MUST NOT exceed 4,000,000 weight units.
ValidationResult<BlockError> ValidateBlockWeight(const BlockValidationContext& context) {
    if (protocol::BlockWeight(context.block) > kMaxBlockWeight) return BlockError::OverweightBlock;
    return {};
}

}  // namespace rules

namespace {

// clang-format off
constexpr std::array kHeaderRules = {
    NamedRule<HeaderRule>{"ValidatePreviousHash",         {rules::ValidatePreviousHash}},
    NamedRule<HeaderRule>{"ValidateProofOfWork",          {rules::ValidateProofOfWork}},
    NamedRule<HeaderRule>{"ValidateDifficultyAdjustment", {rules::ValidateDifficultyAdjustment}},
    NamedRule<HeaderRule>{"ValidateMedianTimePast",       {rules::ValidateMedianTimePast}},
    NamedRule<HeaderRule>{"ValidateTimestampCurrent",     {rules::ValidateTimestampCurrent}},
    NamedRule<HeaderRule>{"ValidateVersion",              {rules::ValidateVersion}},
};

constexpr std::array kTransactionRules = {
    NamedRule<TransactionRule>{"ValidateInputCount",            {rules::ValidateInputCount}},
    NamedRule<TransactionRule>{"ValidateOutputCount",           {rules::ValidateOutputCount}},
    NamedRule<TransactionRule>{"ValidateTransactionSize",       {rules::ValidateTransactionSize}},
    NamedRule<TransactionRule>{"ValidateOutputValues",          {rules::ValidateOutputValues}},
    NamedRule<TransactionRule>{"ValidateUniqueInputs",          {rules::ValidateUniqueInputs}},
    NamedRule<TransactionRule>{"ValidateCoinbaseSignatureSize", {rules::ValidateCoinbaseSignatureSize}},
    NamedRule<TransactionRule>{"ValidateInputsPrevout",         {rules::ValidateInputsPrevout}},
};

constexpr std::array kBlockStructureRules = {
    NamedRule<BlockStructureRule>{"ValidateNonEmpty",          {rules::ValidateNonEmpty}},
    NamedRule<BlockStructureRule>{"ValidateMerkleRoot",        {rules::ValidateMerkleRoot}},
    NamedRule<BlockStructureRule>{"ValidateOriginalSizeLimit", {rules::ValidateOriginalSizeLimit}},
    NamedRule<BlockStructureRule>{"ValidateCoinbase",          {rules::ValidateCoinbase}},
    NamedRule<BlockStructureRule>{"ValidateTransactions",      {rules::ValidateTransactions}},
    NamedRule<BlockStructureRule>{"ValidateSignatureOps",      {rules::ValidateSignatureOps}},
};

constexpr std::array kBlockContextRules = {
    NamedRule<BlockContextRule>{"ValidateTransactionFinality", {rules::ValidateTransactionFinality}},
    NamedRule<BlockContextRule>{"ValidateCoinbaseHeight",      {rules::ValidateCoinbaseHeight, BIP::HeightInCoinbase}},
    NamedRule<BlockContextRule>{"ValidateWitnessCommitment",   {rules::ValidateWitnessCommitment, BIP::SegWit}},
    NamedRule<BlockContextRule>{"ValidateBlockWeight",         {rules::ValidateBlockWeight}},
};
// clang-format on

template <typename R, size_t N>
constexpr std::array<R, N> Unnamed(const std::array<NamedRule<R>, N>& named) {
    std::array<R, N> out{};
    for (size_t i = 0; i < N; ++i) out[i] = named[i].rule;
    return out;
}

constexpr auto kHeaderRuleset = Unnamed(kHeaderRules);
constexpr auto kTransactionRuleset = Unnamed(kTransactionRules);
constexpr auto kBlockStructureRuleset = Unnamed(kBlockStructureRules);
constexpr auto kBlockContextRuleset = Unnamed(kBlockContextRules);

}  // namespace

std::span<const NamedRule<HeaderRule>> HeaderRules() { return kHeaderRules; }
std::span<const NamedRule<TransactionRule>> TransactionRules() { return kTransactionRules; }
std::span<const NamedRule<BlockStructureRule>> BlockStructureRules() { return kBlockStructureRules; }
std::span<const NamedRule<BlockContextRule>> BlockContextRules() { return kBlockContextRules; }

std::span<const HeaderRule> HeaderRuleset() { return kHeaderRuleset; }
std::span<const TransactionRule> TransactionRuleset() { return kTransactionRuleset; }
std::span<const BlockStructureRule> BlockStructureRuleset() { return kBlockStructureRuleset; }
std::span<const BlockContextRule> BlockContextRuleset() { return kBlockContextRuleset; }

ValidationResult<HeaderError> ValidateHeader(const protocol::BlockHeader& header, const HeaderContext& parent,
                                             const AncestorView& view, int64_t current_time,
                                             const protocol::ChainParams& params) {
    const HeaderValidationContext context{header, parent, view, current_time, parent.height + 1, params};
    return ValidateRules<HeaderError>(HeaderRuleset(), context.height, context);
}

ValidationResult<TransactionError> ValidateTransaction(const Transaction& transaction,
                                                       const protocol::ChainParams& params) {
    const TransactionValidationContext context{transaction, params};
    return ValidateRules<TransactionError>(TransactionRuleset(), 0, context);
}

ValidationResult<BlockOrTransactionError> ValidateBlockStructure(const Block& block,
                                                                 const protocol::ChainParams& params) {
    const BlockStructureContext context{block, params};
    return ValidateRules<BlockOrTransactionError>(BlockStructureRuleset(), 0, context);
}

ValidationResult<BlockError> ValidateBlockContext(const Block& block, int height, const AncestorView& ancestry,
                                                  const protocol::ChainParams& params) {
    const BlockValidationContext context{block, height, ancestry, params};
    return ValidateRules<BlockError>(BlockContextRuleset(), context.height, context);
}

std::string_view RuleNameFor(HeaderError error) { return kHeaderRules[static_cast<size_t>(error)].name; }
std::string_view RuleNameFor(TransactionError error) { return kTransactionRules[static_cast<size_t>(error)].name; }

std::string_view RuleNameFor(BlockError error) {
    switch (error) {
        case BlockError::EmptyBlock: return "ValidateNonEmpty";
        case BlockError::BadMerkleRoot: return "ValidateMerkleRoot";
        case BlockError::OversizedBlock: return "ValidateOriginalSizeLimit";
        case BlockError::BadCoinbase: return "ValidateCoinbase";
        case BlockError::TooManySigOps: return "ValidateSignatureOps";
        case BlockError::NonFinalTransaction: return "ValidateTransactionFinality";
        case BlockError::BadCoinbaseHeight: return "ValidateCoinbaseHeight";
        case BlockError::BadWitnessCommitment: return "ValidateWitnessCommitment";
        case BlockError::OverweightBlock: return "ValidateBlockWeight";
    }
    return "Unknown";
}

std::string_view RuleNameFor(const BlockOrTransactionError& error) {
    if (const auto* block = error.Block()) return RuleNameFor(*block);
    return "ValidateTransactions";
}

}  // namespace hornet::consensus
