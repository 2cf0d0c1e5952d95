// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <span>
#include <string_view>

#include "hornet/consensus/contexts.hpp"
#include "hornet/consensus/errors.hpp"
#include "hornet/consensus/rule.hpp"

namespace hornet::consensus {

using HeaderRule = Rule<HeaderValidationContext, HeaderError>;
using TransactionRule = Rule<TransactionValidationContext, TransactionError>;
using BlockStructureRule = Rule<BlockStructureContext, BlockOrTransactionError>;
using BlockContextRule = Rule<BlockValidationContext, BlockError>;

// A native rule together with the name it is published under.
template <typename R>
struct NamedRule {
    std::string_view name;
    R rule;
};

namespace rules {

// Header rules.
ValidationResult<HeaderError> ValidatePreviousHash(const HeaderValidationContext& context);
ValidationResult<HeaderError> ValidateProofOfWork(const HeaderValidationContext& context);
ValidationResult<HeaderError> ValidateDifficultyAdjustment(const HeaderValidationContext& context);
ValidationResult<HeaderError> ValidateMedianTimePast(const HeaderValidationContext& context);
ValidationResult<HeaderError> ValidateTimestampCurrent(const HeaderValidationContext& context);
ValidationResult<HeaderError> ValidateVersion(const HeaderValidationContext& context);

// Transaction rules.
ValidationResult<TransactionError> ValidateInputCount(const TransactionValidationContext& context);
ValidationResult<TransactionError> ValidateOutputCount(const TransactionValidationContext& context);
ValidationResult<TransactionError> ValidateTransactionSize(const TransactionValidationContext& context);
ValidationResult<TransactionError> ValidateOutputValues(const TransactionValidationContext& context);
ValidationResult<TransactionError> ValidateUniqueInputs(const TransactionValidationContext& context);
ValidationResult<TransactionError> ValidateCoinbaseSignatureSize(const TransactionValidationContext& context);
ValidationResult<TransactionError> ValidateInputsPrevout(const TransactionValidationContext& context);

// Block structure rules.
ValidationResult<BlockOrTransactionError> ValidateNonEmpty(const BlockStructureContext& context);
ValidationResult<BlockOrTransactionError> ValidateMerkleRoot(const BlockStructureContext& context);
ValidationResult<BlockOrTransactionError> ValidateOriginalSizeLimit(const BlockStructureContext& context);
ValidationResult<BlockOrTransactionError> ValidateCoinbase(const BlockStructureContext& context);
ValidationResult<BlockOrTransactionError> ValidateTransactions(const BlockStructureContext& context);
ValidationResult<BlockOrTransactionError> ValidateSignatureOps(const BlockStructureContext& context);

// Block context rules.
ValidationResult<BlockError> ValidateTransactionFinality(const BlockValidationContext& context);
ValidationResult<BlockError> ValidateCoinbaseHeight(const BlockValidationContext& context);
ValidationResult<BlockError> ValidateWitnessCommitment(const BlockValidationContext& context);
ValidationResult<BlockError> ValidateBlockWeight(const BlockValidationContext& context);

}  // namespace rules

// The native rulesets in evaluation order.
std::span<const NamedRule<HeaderRule>> HeaderRules();
std::span<const NamedRule<TransactionRule>> TransactionRules();
std::span<const NamedRule<BlockStructureRule>> BlockStructureRules();
std::span<const NamedRule<BlockContextRule>> BlockContextRules();

std::span<const HeaderRule> HeaderRuleset();
std::span<const TransactionRule> TransactionRuleset();
std::span<const BlockStructureRule> BlockStructureRuleset();
std::span<const BlockContextRule> BlockContextRuleset();

// Header validation, mirroring CheckBlockHeader + ContextualCheckBlockHeader.
ValidationResult<HeaderError> ValidateHeader(const protocol::BlockHeader& header, const HeaderContext& parent,
                                             const AncestorView& view, int64_t current_time,
                                             const protocol::ChainParams& params);

// Transaction validation, mirroring CheckTransaction.
ValidationResult<TransactionError> ValidateTransaction(const protocol::Transaction& transaction,
                                                       const protocol::ChainParams& params);

// Non-contextual block validation, mirroring CheckBlock.
ValidationResult<BlockOrTransactionError> ValidateBlockStructure(const protocol::Block& block,
                                                                 const protocol::ChainParams& params);

// Contextual block validation, mirroring ContextualCheckBlock.
ValidationResult<BlockError> ValidateBlockContext(const protocol::Block& block, int height,
                                                  const AncestorView& ancestry, const protocol::ChainParams& params);

// Name of the native rule that reports the given error.
std::string_view RuleNameFor(HeaderError error);
std::string_view RuleNameFor(TransactionError error);
std::string_view RuleNameFor(BlockError error);
std::string_view RuleNameFor(const BlockOrTransactionError& error);

}  // namespace hornet::consensus
