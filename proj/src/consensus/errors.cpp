// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/consensus/errors.hpp"

#include <array>

namespace hornet::consensus {

namespace {
constexpr std::array kHeaderErrors = {HeaderError::ParentNotFound,    HeaderError::InvalidProofOfWork,
                                      HeaderError::BadDifficultyTransition, HeaderError::TimestampTooEarly,
                                      HeaderError::TimestampTooLate,  HeaderError::BadVersion};
constexpr std::array kTransactionErrors = {
    TransactionError::NoInputs,        TransactionError::NoOutputs,       TransactionError::OversizedTransaction,
    TransactionError::BadOutputValue,  TransactionError::DuplicateInputs, TransactionError::BadCoinbaseScriptSize,
    TransactionError::NullPrevout};
constexpr std::array kBlockErrors = {
    BlockError::EmptyBlock,          BlockError::BadMerkleRoot,     BlockError::OversizedBlock,
    BlockError::BadCoinbase,         BlockError::TooManySigOps,     BlockError::NonFinalTransaction,
    BlockError::BadCoinbaseHeight,   BlockError::BadWitnessCommitment, BlockError::OverweightBlock};

template <typename E, size_t N>
std::optional<E> ParseName(const std::array<E, N>& all, std::string_view name) {
    for (const E e : all) {
        if (ToString(e) == name) return e;
    }
    return std::nullopt;
}
}  // namespace

std::string_view ToString(HeaderError error) {
    switch (error) {
        case HeaderError::ParentNotFound: return "ParentNotFound";
        case HeaderError::InvalidProofOfWork: return "InvalidProofOfWork";
        case HeaderError::BadDifficultyTransition: return "BadDifficultyTransition";
        case HeaderError::TimestampTooEarly: return "TimestampTooEarly";
        case HeaderError::TimestampTooLate: return "TimestampTooLate";
        case HeaderError::BadVersion: return "BadVersion";
    }
    return "Unknown";
}

std::string_view ToString(TransactionError error) {
    switch (error) {
        case TransactionError::NoInputs: return "NoInputs";
        case TransactionError::NoOutputs: return "NoOutputs";
        case TransactionError::OversizedTransaction: return "OversizedTransaction";
        case TransactionError::BadOutputValue: return "BadOutputValue";
        case TransactionError::DuplicateInputs: return "DuplicateInputs";
        case TransactionError::BadCoinbaseScriptSize: return "BadCoinbaseScriptSize";
        case TransactionError::NullPrevout: return "NullPrevout";
    }
    return "Unknown";
}

std::string_view ToString(BlockError error) {
    switch (error) {
        case BlockError::EmptyBlock: return "EmptyBlock";
        case BlockError::BadMerkleRoot: return "BadMerkleRoot";
        case BlockError::OversizedBlock: return "OversizedBlock";
        case BlockError::BadCoinbase: return "BadCoinbase";
        case BlockError::TooManySigOps: return "TooManySigOps";
        case BlockError::NonFinalTransaction: return "NonFinalTransaction";
        case BlockError::BadCoinbaseHeight: return "BadCoinbaseHeight";
        case BlockError::BadWitnessCommitment: return "BadWitnessCommitment";
        case BlockError::OverweightBlock: return "OverweightBlock";
    }
    return "Unknown";
}

std::string ToString(const BlockOrTransactionError& error) {
    if (const auto* block = error.Block()) return std::string(ToString(*block));
    const auto* tx = error.Transaction();
    return "tx[" + std::to_string(tx->index) + "]:" + std::string(ToString(tx->error));
}

std::optional<HeaderError> ParseHeaderError(std::string_view name) { return ParseName(kHeaderErrors, name); }
std::optional<TransactionError> ParseTransactionError(std::string_view name) {
    return ParseName(kTransactionErrors, name);
}
std::optional<BlockError> ParseBlockError(std::string_view name) { return ParseName(kBlockErrors, name); }

}  // namespace hornet::consensus
