// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hornet/cli/commands.hpp"
#include "hornet/cli/fixture_miner.hpp"
#include "hornet/consensus/block_checks.hpp"
#include "hornet/consensus/errors.hpp"
#include "hornet/data/header_tree.hpp"
#include "hornet/protocol/fixture.hpp"
#include "hornet/util/hex.hpp"

namespace hornet::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kPrefix = HORNET_TEST_DATA_DIR "/mainnet-headers-0-1111.bin";
const std::string kRules = HORNET_RULES_DIR;

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
    json Json() const { return json::parse(out); }
};

Outcome RunCli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = RunCommandLine(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hornet-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string Path(const std::string& name) const { return (dir_ / name).string(); }

    void WriteBytes(const std::string& name, const std::vector<uint8_t>& bytes) const {
        std::ofstream out(Path(name), std::ios::binary);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }

    void WriteText(const std::string& name, const std::string& text) const { std::ofstream(Path(name)) << text; }

    std::vector<uint8_t> ReadBytes(const std::string& path) const {
        std::ifstream in(path, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    fs::path dir_;
};

void ExpectSchema(const json& report) {
    EXPECT_EQ(report.at("schema"), 1);
    EXPECT_TRUE(report.at("command").is_string());
    EXPECT_TRUE(report.at("params").is_string());
    EXPECT_TRUE(report.at("elapsed_ms").is_number_integer());
    size_t ok = 0, err = 0;
    for (const auto& item : report.at("items")) {
        EXPECT_TRUE(item.at("id").is_string());
        if (item.at("ok").get<bool>()) {
            EXPECT_TRUE(item.at("error").is_null());
            ++ok;
        } else {
            EXPECT_TRUE(item.at("error").is_string());
            ++err;
        }
    }
    EXPECT_EQ(report.at("count_ok"), ok);
    EXPECT_EQ(report.at("count_err"), err);
}

TEST_F(CliTest, ValidatesMainnetPrefix) {
    const auto result = RunCli({"validate-headers", kPrefix, "--params", "mainnet", "--json"});
    ASSERT_EQ(result.code, kExitOk) << result.err;
    const json report = result.Json();
    ExpectSchema(report);
    EXPECT_EQ(report["command"], "validate-headers");
    EXPECT_EQ(report["params"], "mainnet");
    EXPECT_EQ(report["count_ok"], 1112);
    EXPECT_EQ(report["items"][1111]["id"], "1111");
}

TEST_F(CliTest, FlippedNonceFailsProofOfWork) {
    auto bytes = ReadBytes(kPrefix);
    bytes[1000 * 80 + 76] ^= 0x01;
    WriteBytes("flipped.bin", bytes);
    const auto result = RunCli({"--json", "--params", "mainnet", "validate-headers", Path("flipped.bin")});
    EXPECT_EQ(result.code, kExitFailure);
    const json report = result.Json();
    ExpectSchema(report);
    EXPECT_EQ(report["count_ok"], 1000);
    EXPECT_EQ(report["count_err"], 1);
    EXPECT_EQ(report["items"].back()["id"], "1000");
    EXPECT_EQ(report["items"].back()["error"], "InvalidProofOfWork");

    const auto all = RunCli({"--json", "--params", "mainnet", "--keep-going", "validate-headers", Path("flipped.bin")});
    EXPECT_EQ(all.code, kExitFailure);
    const json full = all.Json();
    EXPECT_EQ(full["items"].size(), 1112u);
    EXPECT_EQ(full["items"][1001]["error"], "ParentNotFound");
    for (const auto& item : full["items"])
        if (!item["ok"].get<bool>()) EXPECT_TRUE(consensus::ParseHeaderError(item["error"].get<std::string>()));
}

TEST_F(CliTest, EmptyAndMalformedFixtures) {
    WriteBytes("empty.bin", {});
    const auto empty = RunCli({"validate-headers", Path("empty.bin"), "--json"});
    EXPECT_EQ(empty.code, kExitOk);
    EXPECT_EQ(empty.Json()["count_ok"], 0);
    EXPECT_EQ(empty.Json()["count_err"], 0);

    WriteBytes("short.bin", std::vector<uint8_t>(79, 0));
    EXPECT_EQ(RunCli({"validate-headers", Path("short.bin")}).code, kExitUsage);
    EXPECT_EQ(RunCli({"validate-headers", Path("missing.bin")}).code, kExitUsage);

    const auto bench = RunCli({"bench-headers", Path("empty.bin"), "--json"});
    EXPECT_EQ(bench.code, kExitOk);
    EXPECT_EQ(bench.Json()["headers"], 0);
    EXPECT_EQ(bench.Json()["headers_per_second"], 0);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(RunCli({}).code, kExitUsage);
    EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(RunCli({"validate-headers", kPrefix, "--params", "testnet"}).code, kExitUsage);
    EXPECT_EQ(RunCli({"validate-headers", kPrefix, "--activate", "BIP9=1"}).code, kExitUsage);
    EXPECT_EQ(RunCli({"validate-headers", kPrefix, "--activate", "BIP34"}).code, kExitUsage);
    EXPECT_EQ(RunCli({"validate-block", Path("x.hex")}).code, kExitUsage);
    EXPECT_EQ(RunCli({"mine-fixture", "--out", Path("m"), "--length", "10", "--fork", "fork@20+1"}).code, kExitUsage);
    EXPECT_EQ(RunCli({"mine-fixture", "--out", Path("m"), "--length", "10", "--params", "mainnet"}).code, kExitUsage);
}

TEST_F(CliTest, MinedFixtureValidatesAndForkPromotes) {
    const auto mined = RunCli({"mine-fixture", "--out", Path("fx"), "--length", "100", "--fork", "fork@50+3", "--seed", "9"});
    ASSERT_EQ(mined.code, kExitOk) << mined.err;
    const auto validated = RunCli({"--params", "regtest", "--json", "validate-headers", Path("fx/headers.bin")});
    ASSERT_EQ(validated.code, kExitOk) << validated.out;
    EXPECT_EQ(validated.Json()["count_ok"], 100);

    const auto headers = protocol::ReadHeaderFixture(Path("fx/headers.bin"));
    const auto fork = protocol::ReadHeaderFixture(Path("fx/forks/fork-50-3.bin"));
    ASSERT_TRUE(headers && fork);
    ASSERT_EQ(fork->size(), 3u);
    EXPECT_EQ(fork->front().previous_block_hash, (*headers)[50].ComputeHash());

    // A fork long enough to win: replay it on a tree and promote it past the shorter main chain.
    auto params = protocol::ChainParams::Regtest();
    data::HeaderTree tree;
    ASSERT_TRUE(data::AcceptGenesis(tree, headers->front(), params));
    for (size_t h = 1; h <= 52; ++h) ASSERT_TRUE(data::AcceptHeader(tree, (*headers)[h], 2'000'000'000, params));
    std::optional<data::NodeRef> tip;
    for (const auto& header : *fork) {
        const auto added = data::AcceptHeader(tree, header, 2'000'000'000, params);
        ASSERT_TRUE(added) << data::ToString(added.error());
        tip = *added;
    }
    const std::vector<protocol::Hash256> old = {tree.ChainHashAt(51), tree.ChainHashAt(52)};
    const auto promoted = tree.PromoteBranch(*tip, old);
    ASSERT_TRUE(promoted);
    EXPECT_EQ(tree.ChainLength(), 54);
    EXPECT_EQ(tree.Tip()->hash, fork->back().ComputeHash());

    const json manifest = json::parse(std::ifstream(Path("fx/manifest.json")));
    EXPECT_EQ(manifest["length"], 100);
    EXPECT_EQ(manifest["forks"][0]["spec"], "fork@50+3");
    EXPECT_EQ(manifest["tip"], headers->back().ComputeHash().ToString());
}

TEST_F(CliTest, MiningIsDeterministic) {
    ASSERT_EQ(RunCli({"mine-fixture", "--out", Path("a"), "--length", "40", "--seed", "3", "--violators", "2"}).code, kExitOk);
    ASSERT_EQ(RunCli({"mine-fixture", "--out", Path("b"), "--length", "40", "--seed", "3", "--violators", "2"}).code, kExitOk);
    EXPECT_EQ(ReadBytes(Path("a/headers.bin")), ReadBytes(Path("b/headers.bin")));
    EXPECT_EQ(ReadBytes(Path("a/blocks/violation-weight-1.hex")), ReadBytes(Path("b/blocks/violation-weight-1.hex")));
    ASSERT_EQ(RunCli({"mine-fixture", "--out", Path("c"), "--length", "40", "--seed", "4"}).code, kExitOk);
    EXPECT_NE(ReadBytes(Path("a/headers.bin")), ReadBytes(Path("c/headers.bin")));
}

TEST_F(CliTest, ZeroLengthFixture) {
    const auto result = RunCli({"mine-fixture", "--out", Path("zero"), "--length", "0"});
    EXPECT_EQ(result.code, kExitOk) << result.err;
    EXPECT_TRUE(ReadBytes(Path("zero/headers.bin")).empty());
    EXPECT_EQ(RunCli({"validate-headers", Path("zero/headers.bin"), "--params", "regtest"}).code, kExitOk);
}

std::string BlockHex(const protocol::Block& block) { return util::ToHex(protocol::SerializeBlock(block)); }

TEST_F(CliTest, ValidateBlock) {
    ASSERT_EQ(RunCli({"mine-fixture", "--out", Path("fx"), "--length", "30", "--seed", "5"}).code, kExitOk);
    const auto good = RunCli({"--params", "regtest", "validate-block", Path("fx/blocks/000012.hex"), "--height", "12",
                           "--ancestry", Path("fx/headers.bin"), "--json"});
    ASSERT_EQ(good.code, kExitOk) << good.out << good.err;
    ExpectSchema(good.Json());

    const auto corpus = ReadCorpus(Path("fx"));
    ASSERT_TRUE(corpus);
    protocol::Block block = corpus->blocks[12].block;
    block.header.merkle_root = protocol::Hash256{};
    WriteText("zeroed.hex", BlockHex(block));
    const auto zeroed = RunCli({"--params", "regtest", "--json", "validate-block", Path("zeroed.hex"), "--height", "12",
                             "--ancestry", Path("fx/headers.bin")});
    EXPECT_EQ(zeroed.code, kExitFailure);
    EXPECT_EQ(zeroed.Json()["items"][0]["error"], "BadMerkleRoot");
    EXPECT_EQ(zeroed.Json()["rule"], "ValidateMerkleRoot");

    // Coinbase-only block with one heavy witness spend, sized to weigh exactly 4,000,001 units.
    protocol::Block heavy;
    heavy.header = corpus->blocks[12].block.header;
    heavy.transactions.push_back(MakeCoinbase(12, 1));
    protocol::Transaction spend;
    spend.version = 2;
    spend.inputs.push_back({{protocol::Txid(corpus->blocks[3].block.transactions[0]), 0}, {}, 0xffffffff, {{}}});
    spend.outputs.push_back({1000, std::vector<uint8_t>(900'000, 0x6a)});
    heavy.transactions.push_back(spend);
    const std::vector<uint8_t> reserved(32, 0);
    heavy.transactions[0].inputs[0].witness = {reserved};
    std::vector<uint8_t> commitment_script(consensus::kWitnessCommitmentPrefix.begin(), consensus::kWitnessCommitmentPrefix.end());
    commitment_script.resize(38);
    heavy.transactions[0].outputs.push_back({0, commitment_script});
    auto& witness = heavy.transactions[1].inputs[0].witness[0];
    for (int i = 0; i < 4; ++i) {
        const int64_t weight = static_cast<int64_t>(protocol::BlockWeight(heavy));
        witness.resize(static_cast<size_t>(static_cast<int64_t>(witness.size()) + 4'000'001 - weight));
    }
    const auto root = consensus::WitnessCommitment(consensus::WitnessMerkleRoot(heavy), reserved);
    std::copy(root.Bytes().begin(), root.Bytes().end(), heavy.transactions[0].outputs[1].script_pubkey.begin() + 6);
    SealBlock(heavy);
    ASSERT_EQ(protocol::BlockWeight(heavy), 4'000'001u);
    WriteText("heavy.hex", BlockHex(heavy));
    const auto overweight = RunCli({"--params", "regtest", "--json", "validate-block", Path("heavy.hex"), "--height", "12",
                                 "--ancestry", Path("fx/headers.bin")});
    EXPECT_EQ(overweight.code, kExitFailure);
    EXPECT_EQ(overweight.Json()["items"][0]["error"], "OverweightBlock") << overweight.out;

    heavy.transactions[1].inputs[0].witness[0].pop_back();
    const auto trimmed_root = consensus::WitnessCommitment(consensus::WitnessMerkleRoot(heavy), reserved);
    std::copy(trimmed_root.Bytes().begin(), trimmed_root.Bytes().end(),
              heavy.transactions[0].outputs[1].script_pubkey.begin() + 6);
    SealBlock(heavy);
    ASSERT_EQ(protocol::BlockWeight(heavy), 4'000'000u);
    WriteText("limit.hex", BlockHex(heavy));
    EXPECT_EQ(RunCli({"--params", "regtest", "validate-block", Path("limit.hex"), "--height", "12", "--ancestry",
                   Path("fx/headers.bin")}).code,
              kExitOk);
}

TEST_F(CliTest, DslCheck) {
    const auto ok = RunCli({"dsl", "check", kRules + "/block_context.hornet", kRules + "/header.hornet", "--json"});
    EXPECT_EQ(ok.code, kExitOk) << ok.out;
    EXPECT_EQ(ok.Json()["count_ok"], 2);

    WriteText("bad.hornet", "rule A(block: Block)\n  BlockError? {}\n");
    const auto bad = RunCli({"dsl", "check", Path("bad.hornet")});
    EXPECT_EQ(bad.code, kExitFailure);
    EXPECT_NE((bad.out + bad.err).find("bad.hornet:2:3: error[parse.expected-token]"), std::string::npos)
        << bad.out << bad.err;
    EXPECT_EQ(RunCli({"dsl", "check", Path("nope.hornet")}).code, kExitUsage);
}

TEST_F(CliTest, DslDiff) {
    ASSERT_EQ(RunCli({"mine-fixture", "--out", Path("fx"), "--length", "80", "--violators", "3", "--seed", "2"}).code, kExitOk);
    const auto same = RunCli({"--json", "dsl", "diff", kRules + "/block_context.hornet", Path("fx")});
    EXPECT_EQ(same.code, kExitOk) << same.out;
    ExpectSchema(same.Json());

    std::ifstream in(kRules + "/block_context.hornet");
    std::string line, edited;
    while (std::getline(in, line))
        if (line.find("BIP141") == std::string::npos) edited += line + "\n";
    WriteText("edited.hornet", edited);
    const auto diff = RunCli({"--json", "dsl", "diff", Path("edited.hornet"), Path("fx")});
    EXPECT_EQ(diff.code, kExitFailure);
    const json report = diff.Json();
    bool witness_flagged = false;
    for (const auto& item : report["items"])
        witness_flagged |= item["id"].get<std::string>().find("violation-witness-commitment") != std::string::npos;
    EXPECT_TRUE(witness_flagged) << diff.out;
}

TEST_F(CliTest, ScriptRun) {
    const auto ok = RunCli({"script", "run", "0115011593012a87"});
    EXPECT_EQ(ok.code, kExitOk);
    EXPECT_NE(ok.out.find("true"), std::string::npos);
    const auto zero = RunCli({"script", "run", "00"});
    EXPECT_EQ(zero.code, kExitFailure);
    EXPECT_NE(zero.out.find("false"), std::string::npos);
    const auto minimal = RunCli({"--json", "script", "run", "0110", "--minimal"});
    EXPECT_EQ(minimal.code, kExitFailure);
    EXPECT_EQ(minimal.Json()["items"][0]["error"], "NonMinimalPush");
    EXPECT_EQ(RunCli({"script", "run", "0110"}).code, kExitOk);
    EXPECT_EQ(RunCli({"script", "run", "zz"}).code, kExitUsage);
}

TEST_F(CliTest, BenchReportsThroughput) {
    const auto bench = RunCli({"--params", "mainnet", "--json", "bench-headers", kPrefix, "--repeat", "3"});
    ASSERT_EQ(bench.code, kExitOk) << bench.err;
    const json report = bench.Json();
    EXPECT_EQ(report["headers"], 1112);
    EXPECT_EQ(report["runs"].size(), 3u);
    EXPECT_GT(report["headers_per_second"].get<double>(), 0.0);
}

}  // namespace
}  // namespace hornet::cli
