// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hornet/consensus/ancestry.hpp"
#include "hornet/protocol/block.hpp"
#include "hornet/protocol/chain_params.hpp"
#include "hornet/util/expected.hpp"

namespace hornet::cli {

using protocol::Block;
using protocol::BlockHeader;
using protocol::ChainParams;

// "fork@50+3": three headers branching off the main-chain block at height 50.
struct ForkSpec {
    int at = 0;
    int length = 0;

    std::string ToString() const;
    friend bool operator==(const ForkSpec&, const ForkSpec&) = default;
};

std::optional<ForkSpec> ParseForkSpec(std::string_view text);

// The block-context rule a generated violator breaks.
enum class Violation { Finality, CoinbaseHeight, WitnessCommitment, Weight };

inline constexpr Violation kAllViolations[] = {Violation::Finality, Violation::CoinbaseHeight,
                                                Violation::WitnessCommitment, Violation::Weight};

std::string_view ToString(Violation violation);

struct MineOptions {
    int length = 0;
    uint64_t seed = 0;
    std::vector<ForkSpec> forks;
    // Number of violator blocks generated per violation kind.
    int violators_per_rule = 0;
    uint32_t start_time = 1'700'000'000;
};

// A block outside the main chain, validated as if it extended the main-chain block at height - 1.
struct CorpusBlock {
    std::string id;
    int height = 0;
    Block block;
};

struct Fork {
    ForkSpec spec;
    std::vector<BlockHeader> headers;
};

struct MinedFixture {
    std::vector<Block> blocks;  // main chain, index == height
    std::vector<Fork> forks;
    std::vector<CorpusBlock> extras;

    std::vector<BlockHeader> Headers() const;
};

// Deterministic for a given (params, options). Fails when proof of work is not cheap
// under params or the options are inconsistent.
util::Expected<MinedFixture, std::string> MineFixture(const ChainParams& params, const MineOptions& options);

// Increments the nonce (and timestamp on nonce wrap) until the header meets its own target.
bool GrindNonce(BlockHeader& header);

// Recomputes the Merkle root and grinds a valid nonce.
void SealBlock(Block& block);

// Coinbase paying to OP_TRUE whose scriptSig starts with the height push.
protocol::Transaction MakeCoinbase(int height, uint64_t extra_nonce);

// Ancestors of the header at parent_index in a height-ordered list; offset 0 is the parent.
class HeaderListView final : public consensus::AncestorView {
public:
    HeaderListView(const std::vector<BlockHeader>& headers, int parent_index)
        : headers_(&headers), parent_index_(parent_index) {}

    int Depth() const override { return parent_index_ + 1; }
    uint32_t TimestampAtOffset(int offset) const override { return (*headers_)[parent_index_ - offset].timestamp; }

private:
    const std::vector<BlockHeader>* headers_;
    int parent_index_;
};

// On-disk layout: headers.bin, blocks/*.hex, forks/*.bin and manifest.json.
struct Corpus {
    std::string params_name;
    std::vector<std::pair<protocol::BIP, int>> activations;
    std::vector<BlockHeader> headers;
    std::vector<CorpusBlock> blocks;
    std::vector<Fork> forks;
};

util::Expected<void, std::string> WriteCorpus(const std::filesystem::path& dir, const ChainParams& params,
                                              const MineOptions& options, const MinedFixture& fixture);

util::Expected<Corpus, std::string> ReadCorpus(const std::filesystem::path& dir);

}  // namespace hornet::cli
