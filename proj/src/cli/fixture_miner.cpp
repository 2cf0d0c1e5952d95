// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/cli/fixture_miner.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "hornet/consensus/block_checks.hpp"
#include "hornet/consensus/difficulty.hpp"
#include "hornet/protocol/fixture.hpp"
#include "hornet/script/opcodes.hpp"
#include "hornet/script/script_num.hpp"

namespace hornet::cli {

namespace fs = std::filesystem;
using protocol::Bytes;
using protocol::Hash256;
using protocol::Transaction;
using protocol::TxInput;
using protocol::TxOutput;

std::string ForkSpec::ToString() const { return "fork@" + std::to_string(at) + "+" + std::to_string(length); }

std::optional<ForkSpec> ParseForkSpec(std::string_view text) {
    constexpr std::string_view kPrefix = "fork@";
    if (!text.starts_with(kPrefix)) return std::nullopt;
    text.remove_prefix(kPrefix.size());
    const size_t plus = text.find('+');
    if (plus == std::string_view::npos) return std::nullopt;
    ForkSpec spec;
    const auto parse = [](std::string_view digits, int& out) {
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
        return !digits.empty() && ec == std::errc{} && end == digits.data() + digits.size();
    };
    if (!parse(text.substr(0, plus), spec.at) || !parse(text.substr(plus + 1), spec.length)) return std::nullopt;
    if (spec.at < 0 || spec.length < 1) return std::nullopt;
    return spec;
}

std::string_view ToString(Violation violation) {
    switch (violation) {
        case Violation::Finality: return "finality";
        case Violation::CoinbaseHeight: return "coinbase-height";
        case Violation::WitnessCommitment: return "witness-commitment";
        case Violation::Weight: return "weight";
    }
    return "unknown";
}

std::vector<BlockHeader> MinedFixture::Headers() const {
    std::vector<BlockHeader> headers;
    headers.reserve(blocks.size());
    for (const Block& block : blocks) headers.push_back(block.header);
    return headers;
}

bool GrindNonce(BlockHeader& header) {
    const auto target = header.bits.Expand();
    if (!target) return false;
    while (protocol::UInt256::FromHash(header.ComputeHash()) > *target) {
        if (++header.nonce == 0) ++header.timestamp;
    }
    return true;
}

void SealBlock(Block& block) {
    std::vector<Hash256> txids;
    for (const Transaction& tx : block.transactions) txids.push_back(protocol::Txid(tx));
    if (!txids.empty()) block.header.merkle_root = *protocol::MerkleRoot(txids);
    GrindNonce(block.header);
}

Transaction MakeCoinbase(int height, uint64_t extra_nonce) {
    Transaction tx;
    TxInput in;
    in.prevout = protocol::OutPoint::Null();
    in.script_sig = consensus::CoinbaseHeightPrefixes(height).front();
    const auto extra = script::EncodeScriptNum(static_cast<int64_t>(extra_nonce & 0x7fffffffffffull) + 1);
    in.script_sig.push_back(static_cast<uint8_t>(extra.size()));
    in.script_sig.insert(in.script_sig.end(), extra.begin(), extra.end());
    tx.inputs.push_back(std::move(in));
    tx.outputs.push_back(TxOutput{50 * int64_t{100'000'000}, {static_cast<uint8_t>(script::Op::Push1)}});
    return tx;
}

namespace {

constexpr uint32_t kSpacing = 600;

class Builder {
public:
    Builder(const ChainParams& params, const MineOptions& options) : params_(params), rng_(options.seed) {}

    uint64_t Next() { return rng_(); }
    int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool Chance(int percent) { return Uniform(0, 99) < percent; }

    protocol::CompactTarget BitsFor(const std::vector<BlockHeader>& chain, int height) {
        if (height == 0) return *protocol::CompactTarget::Compress(params_.pow_limit);
        const HeaderListView view(chain, height - 1);
        return *consensus::AdjustCompactTarget(height, chain[height - 1], view, params_);
    }

    Transaction MakeSpend(const Hash256& funding, int height, bool with_witness) {
        Transaction tx;
        tx.version = 2;
        TxInput in;
        in.prevout = {funding, 0};
        in.script_sig = {static_cast<uint8_t>(script::Op::Push1)};
        if (Chance(50)) {
            in.sequence = TxInput::kFinalSequence - 1;
            if (height > 0) tx.locktime = static_cast<uint32_t>(Uniform(0, height - 1));
        }
        if (with_witness) {
            in.script_sig.clear();
            in.witness.push_back(Bytes(static_cast<size_t>(Uniform(1, 72)), static_cast<uint8_t>(Next())));
        }
        tx.inputs.push_back(std::move(in));
        const int outputs = Uniform(1, 2);
        for (int i = 0; i < outputs; ++i)
            tx.outputs.push_back(TxOutput{Uniform(1, 1'000'000), {static_cast<uint8_t>(script::Op::Push1)}});
        return tx;
    }

    // Adds the coinbase witness reserved value and commitment output.
    static void Commit(Block& block) {
        auto& coinbase = block.transactions.front();
        const Bytes reserved(Hash256::kSize, 0);
        coinbase.inputs[0].witness = {reserved};
        const Hash256 commitment = consensus::WitnessCommitment(consensus::WitnessMerkleRoot(block), reserved);
        Bytes script(consensus::kWitnessCommitmentPrefix.begin(), consensus::kWitnessCommitmentPrefix.end());
        script.insert(script.end(), commitment.Bytes().begin(), commitment.Bytes().end());
        coinbase.outputs.push_back(TxOutput{0, std::move(script)});
    }

    Block MakeBlock(const std::vector<BlockHeader>& chain, int height, uint32_t timestamp,
                    const std::vector<Hash256>& fundings) {
        Block block;
        block.header.version = 4;
        if (height > 0) block.header.previous_block_hash = chain[height - 1].ComputeHash();
        block.header.timestamp = timestamp;
        block.header.bits = BitsFor(chain, height);
        block.transactions.push_back(MakeCoinbase(height, Next()));

        bool witness = false;
        if (!fundings.empty()) {
            const int spends = Uniform(0, 2);
            for (int i = 0; i < spends; ++i) {
                const bool with_witness = Chance(25);
                witness |= with_witness;
                const Hash256& funding = fundings[static_cast<size_t>(Uniform(0, static_cast<int>(fundings.size()) - 1))];
                block.transactions.push_back(MakeSpend(funding, height, with_witness));
            }
        }
        if (witness) Commit(block);
        return block;
    }

    Block MakeViolator(const std::vector<BlockHeader>& chain, int height, const BlockHeader& sibling,
                       const std::vector<Hash256>& fundings, Violation violation) {
        Block block = MakeBlock(chain, height, sibling.timestamp, fundings);
        block.header.bits = sibling.bits;
        switch (violation) {
            case Violation::Finality: {
                Transaction tx = MakeSpend(fundings.front(), height, false);
                tx.locktime = static_cast<uint32_t>(height + Uniform(1, 100));
                tx.inputs[0].sequence = 0;
                block.transactions.push_back(std::move(tx));
                break;
            }
            case Violation::CoinbaseHeight:
                block.transactions.front() = MakeCoinbase(height + 1, Next());
                break;
            case Violation::WitnessCommitment: {
                block.transactions.resize(1);
                block.transactions.push_back(MakeSpend(fundings.front(), height, true));
                break;
            }
            case Violation::Weight: {
                Transaction tx = MakeSpend(fundings.front(), height, false);
                tx.outputs.front().script_pubkey.assign(consensus::kMaxBlockWeight / 4, 0x6a);
                block.transactions.push_back(std::move(tx));
                break;
            }
        }
        // Rebuild the commitment for the final transaction list, except in the block meant to lack one.
        auto& coinbase = block.transactions.front();
        coinbase.outputs.resize(1);
        coinbase.inputs[0].witness.clear();
        bool any_witness = false;
        for (const auto& tx : block.transactions) any_witness |= tx.HasWitness();
        if (any_witness && violation != Violation::WitnessCommitment) Commit(block);
        SealBlock(block);
        return block;
    }

private:
    const ChainParams& params_;
    std::mt19937_64 rng_;
};

}  // namespace

util::Expected<MinedFixture, std::string> MineFixture(const ChainParams& params, const MineOptions& options) {
    using Result = util::Expected<MinedFixture, std::string>;
    if (options.length < 0) return Result(util::Unexpected(std::string("length must be non-negative")));
    if (params.pow_limit.BitLength() < 240)
        return Result(util::Unexpected("proof of work under '" + params.name + "' is too expensive to mine"));
    for (const ForkSpec& fork : options.forks) {
        if (fork.at < 0 || fork.at >= options.length || fork.length < 1)
            return Result(util::Unexpected(fork.ToString() + " does not branch from the mined chain"));
    }
    if (options.violators_per_rule > 0 && options.length < 2)
        return Result(util::Unexpected(std::string("violators need a chain of at least 2 blocks")));

    Builder builder(params, options);
    MinedFixture fixture;
    std::vector<BlockHeader> headers;
    std::vector<Hash256> fundings;
    for (int height = 0; height < options.length; ++height) {
        const uint32_t timestamp =
            height == 0 ? options.start_time
                        : headers.back().timestamp + kSpacing + static_cast<uint32_t>(builder.Uniform(-120, 120));
        Block block = builder.MakeBlock(headers, height, timestamp, fundings);
        SealBlock(block);
        headers.push_back(block.header);
        fundings.push_back(protocol::Txid(block.transactions.front()));
        fixture.blocks.push_back(std::move(block));
    }

    for (const ForkSpec& spec : options.forks) {
        std::vector<BlockHeader> chain(headers.begin(), headers.begin() + spec.at + 1);
        Fork fork{spec, {}};
        for (int i = 0; i < spec.length; ++i) {
            const int height = spec.at + 1 + i;
            BlockHeader header;
            header.version = 4;
            header.previous_block_hash = chain.back().ComputeHash();
            header.timestamp = chain.back().timestamp + kSpacing + 1;
            header.bits = builder.BitsFor(chain, height);
            for (auto& byte : header.merkle_root.MutableBytes()) byte = static_cast<uint8_t>(builder.Next());
            GrindNonce(header);
            chain.push_back(header);
            fork.headers.push_back(header);
        }
        fixture.forks.push_back(std::move(fork));
    }

    for (const Violation violation : kAllViolations) {
        for (int i = 0; i < options.violators_per_rule; ++i) {
            const int height = builder.Uniform(1, options.length - 1);
            const std::vector<Hash256> prior(fundings.begin(), fundings.begin() + height);
            const std::vector<BlockHeader> chain(headers.begin(), headers.begin() + height);
            Block block = builder.MakeViolator(chain, height, headers[height], prior, violation);
            fixture.extras.push_back({"violation-" + std::string(ToString(violation)) + "-" + std::to_string(i),
                                      height, std::move(block)});
        }
    }
    return fixture;
}

namespace {

std::string HeightName(int height) {
    std::string digits = std::to_string(height);
    return std::string(digits.size() < 6 ? 6 - digits.size() : 0, '0') + digits;
}

}  // namespace

util::Expected<void, std::string> WriteCorpus(const fs::path& dir, const ChainParams& params,
                                              const MineOptions& options, const MinedFixture& fixture) {
    using Result = util::Expected<void, std::string>;
    std::error_code ec;
    fs::create_directories(dir / "blocks", ec);
    if (!ec) fs::create_directories(dir / "forks", ec);
    if (ec) return Result(util::Unexpected("cannot create " + dir.string() + ": " + ec.message()));

    const auto headers = fixture.Headers();
    if (auto written = protocol::WriteHeaderFixture(dir / "headers.bin", headers); !written)
        return Result(util::Unexpected(written.error().message));

    nlohmann::json manifest;
    manifest["schema"] = 1;
    manifest["params"] = params.name;
    manifest["seed"] = options.seed;
    manifest["length"] = options.length;
    manifest["headers"] = "headers.bin";
    manifest["tip"] = headers.empty() ? nlohmann::json(nullptr) : nlohmann::json(headers.back().ComputeHash().ToString());
    nlohmann::json activations = nlohmann::json::object();
    for (const protocol::BIP bip : protocol::kAllBips)
        activations[std::string(protocol::ToLabel(bip))] = params.ActivationHeight(bip);
    manifest["activations"] = activations;

    nlohmann::json blocks = nlohmann::json::array();
    const auto write_block = [&](const std::string& id, int height, const Block& block) -> Result {
        const std::string file = "blocks/" + id + ".hex";
        if (auto written = protocol::WriteBlockHex(dir / file, block); !written)
            return Result(util::Unexpected(written.error().message));
        blocks.push_back({{"id", id}, {"file", file}, {"height", height}});
        return {};
    };
    for (size_t h = 0; h < fixture.blocks.size(); ++h) {
        if (auto r = write_block(HeightName(static_cast<int>(h)), static_cast<int>(h), fixture.blocks[h]); !r) return r;
    }
    for (const CorpusBlock& extra : fixture.extras) {
        if (auto r = write_block(extra.id, extra.height, extra.block); !r) return r;
    }
    manifest["blocks"] = blocks;

    nlohmann::json forks = nlohmann::json::array();
    for (const Fork& fork : fixture.forks) {
        const std::string file = "forks/fork-" + std::to_string(fork.spec.at) + "-" + std::to_string(fork.spec.length) + ".bin";
        if (auto written = protocol::WriteHeaderFixture(dir / file, fork.headers); !written)
            return Result(util::Unexpected(written.error().message));
        forks.push_back({{"spec", fork.spec.ToString()},
                         {"at", fork.spec.at},
                         {"length", fork.spec.length},
                         {"file", file},
                         {"tip", fork.headers.back().ComputeHash().ToString()}});
    }
    manifest["forks"] = forks;

    std::ofstream out(dir / "manifest.json");
    out << manifest.dump(2) << '\n';
    if (!out) return Result(util::Unexpected("cannot write " + (dir / "manifest.json").string()));
    return {};
}

util::Expected<Corpus, std::string> ReadCorpus(const fs::path& dir) {
    using Result = util::Expected<Corpus, std::string>;
    std::ifstream in(dir / "manifest.json");
    if (!in) return Result(util::Unexpected("cannot open " + (dir / "manifest.json").string()));
    Corpus corpus;
    try {
        const nlohmann::json manifest = nlohmann::json::parse(in);
        corpus.params_name = manifest.at("params").get<std::string>();
        const nlohmann::json activations = manifest.value("activations", nlohmann::json::object());
        for (const auto& [label, height] : activations.items()) {
            const auto bip = protocol::ParseBip(label);
            if (!bip) return Result(util::Unexpected("unknown BIP '" + label + "' in manifest"));
            corpus.activations.emplace_back(*bip, height.get<int>());
        }
        auto headers = protocol::ReadHeaderFixture(dir / manifest.at("headers").get<std::string>());
        if (!headers) return Result(util::Unexpected(headers.error().message));
        corpus.headers = std::move(*headers);
        for (const auto& entry : manifest.at("blocks")) {
            auto block = protocol::ReadBlockHex(dir / entry.at("file").get<std::string>());
            if (!block) return Result(util::Unexpected(block.error().message));
            corpus.blocks.push_back({entry.at("id").get<std::string>(), entry.at("height").get<int>(), std::move(*block)});
        }
        const nlohmann::json forks = manifest.value("forks", nlohmann::json::array());
        for (const auto& entry : forks) {
            auto fork_headers = protocol::ReadHeaderFixture(dir / entry.at("file").get<std::string>());
            if (!fork_headers) return Result(util::Unexpected(fork_headers.error().message));
            corpus.forks.push_back({{entry.at("at").get<int>(), entry.at("length").get<int>()}, std::move(*fork_headers)});
        }
    } catch (const nlohmann::json::exception& e) {
        return Result(util::Unexpected("malformed manifest: " + std::string(e.what())));
    }
    return corpus;
}

}  // namespace hornet::cli
