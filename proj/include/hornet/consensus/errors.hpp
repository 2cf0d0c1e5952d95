// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hornet::consensus {

enum class HeaderError {
    ParentNotFound,
    InvalidProofOfWork,
    BadDifficultyTransition,
    TimestampTooEarly,
    TimestampTooLate,
    BadVersion,
};

enum class TransactionError {
    NoInputs,
    NoOutputs,
    OversizedTransaction,
    BadOutputValue,
    DuplicateInputs,
    BadCoinbaseScriptSize,
    NullPrevout,
};

enum class BlockError {
    EmptyBlock,
    BadMerkleRoot,
    OversizedBlock,
    BadCoinbase,
    TooManySigOps,
    NonFinalTransaction,
    BadCoinbaseHeight,
    BadWitnessCommitment,
    OverweightBlock,
};

// A transaction-level failure inside block validation, tagged with the failing index.
struct TransactionFailure {
    size_t index = 0;
    TransactionError error = TransactionError::NoInputs;

    friend bool operator==(const TransactionFailure&, const TransactionFailure&) = default;
};

struct BlockOrTransactionError {
    std::variant<BlockError, TransactionFailure> value;

    BlockOrTransactionError() = default;
    BlockOrTransactionError(BlockError e) : value(e) {}
    BlockOrTransactionError(TransactionFailure f) : value(f) {}

    bool IsBlockError() const { return std::holds_alternative<BlockError>(value); }
    const BlockError* Block() const { return std::get_if<BlockError>(&value); }
    const TransactionFailure* Transaction() const { return std::get_if<TransactionFailure>(&value); }

    friend bool operator==(const BlockOrTransactionError&, const BlockOrTransactionError&) = default;
};

// Stable enumerant names, used verbatim in reports.
std::string_view ToString(HeaderError error);
std::string_view ToString(TransactionError error);
std::string_view ToString(BlockError error);
// "BadCoinbase" or "tx[2]:NoOutputs".
std::string ToString(const BlockOrTransactionError& error);

std::optional<HeaderError> ParseHeaderError(std::string_view name);
std::optional<TransactionError> ParseTransactionError(std::string_view name);
std::optional<BlockError> ParseBlockError(std::string_view name);

}  // namespace hornet::consensus
