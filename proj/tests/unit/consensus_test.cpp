// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <gtest/gtest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "hornet/cli/fixture_miner.hpp"
#include "hornet/consensus/block_checks.hpp"
#include "hornet/consensus/difficulty.hpp"
#include "hornet/consensus/rulesets.hpp"
#include "hornet/util/hex.hpp"
#include "random_objects.hpp"
#include "rule_cases.hpp"

namespace hornet::consensus {
namespace {

using boost::multiprecision::cpp_int;
using protocol::Block;
using protocol::BlockHeader;
using protocol::ChainParams;
using protocol::CompactTarget;
using protocol::UInt256;

std::vector<uint8_t> Hex(std::string_view hex) { return *util::FromHex(hex); }

cpp_int ToBig(const UInt256& v) {
    cpp_int out = 0;
    for (int i = 3; i >= 0; --i) out = (out << 64) | cpp_int(v.Limb(i));
    return out;
}

UInt256 FromBig(const cpp_int& v) {
    const std::string hex = v.str(0, std::ios::hex);
    return *UInt256::FromHex(std::string(64 - hex.size(), '0') + hex);
}

// Rule table

TEST(RuleTable, TwentyThreeRulesInOrder) {
    std::vector<std::string_view> names;
    for (const auto& r : HeaderRules()) names.push_back(r.name);
    for (const auto& r : TransactionRules()) names.push_back(r.name);
    for (const auto& r : BlockStructureRules()) names.push_back(r.name);
    for (const auto& r : BlockContextRules()) names.push_back(r.name);
    const std::vector<std::string_view> expected = {
        "ValidatePreviousHash", "ValidateProofOfWork", "ValidateDifficultyAdjustment", "ValidateMedianTimePast",
        "ValidateTimestampCurrent", "ValidateVersion", "ValidateInputCount", "ValidateOutputCount",
        "ValidateTransactionSize", "ValidateOutputValues", "ValidateUniqueInputs", "ValidateCoinbaseSignatureSize",
        "ValidateInputsPrevout", "ValidateNonEmpty", "ValidateMerkleRoot", "ValidateOriginalSizeLimit",
        "ValidateCoinbase", "ValidateTransactions", "ValidateSignatureOps", "ValidateTransactionFinality",
        "ValidateCoinbaseHeight", "ValidateWitnessCommitment", "ValidateBlockWeight"};
    EXPECT_EQ(names, expected);
    EXPECT_EQ(BlockContextRules()[1].rule.bip, BIP::HeightInCoinbase);
    EXPECT_EQ(BlockContextRules()[2].rule.bip, BIP::SegWit);
    EXPECT_FALSE(BlockContextRules()[0].rule.bip);
    EXPECT_FALSE(BlockContextRules()[3].rule.bip);
    for (const auto& r : HeaderRules()) EXPECT_FALSE(r.rule.bip);
}

TEST(RuleTable, ErrorNamesRoundTrip) {
    for (int i = 0; i <= static_cast<int>(HeaderError::BadVersion); ++i) {
        const auto e = static_cast<HeaderError>(i);
        EXPECT_EQ(ParseHeaderError(ToString(e)), e);
        EXPECT_EQ(RuleNameFor(e), HeaderRules()[static_cast<size_t>(i)].name);
    }
    for (int i = 0; i <= static_cast<int>(TransactionError::NullPrevout); ++i) {
        const auto e = static_cast<TransactionError>(i);
        EXPECT_EQ(ParseTransactionError(ToString(e)), e);
        EXPECT_EQ(RuleNameFor(e), TransactionRules()[static_cast<size_t>(i)].name);
    }
    for (int i = 0; i <= static_cast<int>(BlockError::OverweightBlock); ++i) {
        const auto e = static_cast<BlockError>(i);
        EXPECT_EQ(ParseBlockError(ToString(e)), e);
    }
    EXPECT_EQ(ToString(BlockOrTransactionError{TransactionFailure{2, TransactionError::NoInputs}}), "tx[2]:NoInputs");
    EXPECT_EQ(RuleNameFor(BlockOrTransactionError{TransactionFailure{0, TransactionError::NoInputs}}),
              "ValidateTransactions");
}

class RuleCaseTest : public ::testing::TestWithParam<size_t> {
protected:
    static const std::vector<test::RuleCase>& Cases() {
        static const auto cases = test::BuildRuleCases();
        return cases;
    }
};

TEST_P(RuleCaseTest, ViolatorFailsAndRepairPasses) {
    const auto& c = Cases()[GetParam()];
    EXPECT_EQ(c.violator(), c.expected_error) << c.rule;
    EXPECT_EQ(c.repaired(), "ok") << c.rule;
}

INSTANTIATE_TEST_SUITE_P(AllRules, RuleCaseTest, ::testing::Range<size_t>(0, 23),
                         [](const auto& info) { return std::string(test::BuildRuleCases()[info.param].rule); });

TEST(RuleCases, CoverEveryRuleOnce) {
    const auto cases = test::BuildRuleCases();
    ASSERT_EQ(cases.size(), 23u);
    std::vector<std::string> names;
    for (const auto& c : cases) names.push_back(c.rule);
    std::sort(names.begin(), names.end());
    EXPECT_EQ(std::unique(names.begin(), names.end()), names.end());
}

// Engine properties with counting probes

std::vector<int> g_probe_log;
int g_probe_fail_at = -1;

template <int N>
ValidationResult<BlockError> Probe(const BlockValidationContext&) {
    g_probe_log.push_back(N);
    if (N == g_probe_fail_at) return BlockError::EmptyBlock;
    return {};
}

TEST(RuleEngine, StopsAtFirstFailure) {
    const std::array<BlockContextRule, 5> ruleset = {
        BlockContextRule{Probe<0>}, BlockContextRule{Probe<1>}, BlockContextRule{Probe<2>},
        BlockContextRule{Probe<3>}, BlockContextRule{Probe<4>}};
    const Block block;
    const TimestampWindowView view;
    const auto params = ChainParams::Regtest();
    const BlockValidationContext context{block, 0, view, params};
    for (int fail = -1; fail < 5; ++fail) {
        g_probe_log.clear();
        g_probe_fail_at = fail;
        const auto result = ValidateRules<BlockError>(std::span<const BlockContextRule>(ruleset), 0, context);
        EXPECT_EQ(result.has_value(), fail < 0);
        const int ran = fail < 0 ? 5 : fail + 1;
        std::vector<int> expected(static_cast<size_t>(ran));
        for (int i = 0; i < ran; ++i) expected[static_cast<size_t>(i)] = i;
        EXPECT_EQ(g_probe_log, expected) << fail;
    }
}

TEST(RuleEngine, GatedRulesAreSkippedBeforeActivation) {
    auto params = ChainParams::Regtest();
    params.SetActivationHeight(BIP::SegWit, 100);
    const std::array<BlockContextRule, 3> ruleset = {
        BlockContextRule{Probe<0>}, BlockContextRule{Probe<1>, BIP::SegWit}, BlockContextRule{Probe<2>}};
    const Block block;
    const TimestampWindowView view;
    g_probe_fail_at = -1;
    for (const auto& [height, expected] :
         {std::pair{99, std::vector<int>{0, 2}}, std::pair{100, std::vector<int>{0, 1, 2}}}) {
        g_probe_log.clear();
        const BlockValidationContext context{block, height, view, params};
        ASSERT_TRUE(ValidateRules<BlockError>(std::span<const BlockContextRule>(ruleset), height, context));
        EXPECT_EQ(g_probe_log, expected) << height;
    }
}

TEST(RuleEngine, CoinbaseHeightGatingBoundary) {
    auto params = ChainParams::Regtest();
    params.SetActivationHeight(BIP::HeightInCoinbase, 300);
    const TimestampWindowView view(std::vector<uint32_t>(11, 1'700'000'000));
    Block block;
    block.transactions.push_back(cli::MakeCoinbase(5, 1));
    EXPECT_TRUE(ValidateBlockContext(block, 299, view, params));
    const auto at = ValidateBlockContext(block, 300, view, params);
    ASSERT_FALSE(at);
    EXPECT_EQ(at.error(), BlockError::BadCoinbaseHeight);
}

TEST(RuleEngine, VersionGatingBoundary) {
    const auto mainnet = ChainParams::Mainnet();
    const std::tuple<int32_t, int, bool> cases[] = {
        {1, 227930, true},  {1, 227931, false}, {2, 363724, true},  {2, 363725, false},
        {3, 388380, true},  {3, 388381, false}, {4, 388381, true},  {0, 100, true},
        {-1, 227931, false}, {0x20000000, 500000, true},
    };
    for (const auto& [version, height, ok] : cases) {
        BlockHeader header;
        header.version = version;
        const HeaderContext parent{};
        const TimestampWindowView view;
        const HeaderValidationContext context{header, parent, view, 0, height, mainnet};
        EXPECT_EQ(rules::ValidateVersion(context).has_value(), ok) << version << "@" << height;
    }
}

TEST(RuleEngine, ValidationIsDeterministic) {
    test::RandomObjects random(21);
    const auto params = ChainParams::Regtest();
    for (int i = 0; i < 1000; ++i) {
        BlockHeader header = random.Header();
        if (random.Chance(50)) header.bits.bits = 0x207fffff;
        const auto parent = HeaderContext::FromHeader(random.Header(), random.Int(0, 5000));
        if (random.Chance(50)) header.previous_block_hash = parent.hash;
        std::vector<uint32_t> timestamps;
        for (int k = 0; k < random.Int(1, 11); ++k) timestamps.push_back(random.U32());
        const TimestampWindowView view(timestamps);
        const int64_t now = random.U32();
        const auto first = ValidateHeader(header, parent, view, now, params);
        const auto second = ValidateHeader(header, parent, view, now, params);
        ASSERT_EQ(first.has_value(), second.has_value());
        if (!first) EXPECT_EQ(first.error(), second.error());

        const Block block = random.Block(random.Chance(50));
        const auto s1 = ValidateBlockStructure(block, params);
        const auto s2 = ValidateBlockStructure(block, params);
        ASSERT_EQ(s1.has_value(), s2.has_value());
        if (!s1) EXPECT_EQ(s1.error(), s2.error());
        const auto c1 = ValidateBlockContext(block, parent.height, view, params);
        const auto c2 = ValidateBlockContext(block, parent.height, view, params);
        ASSERT_EQ(c1.has_value(), c2.has_value());
        if (!c1) EXPECT_EQ(c1.error(), c2.error());
    }
}

// Median time past

TEST(MedianTimePast, LowerMiddleAndWindow) {
    const std::vector<uint32_t> odd = {5, 1, 4, 2, 3};
    EXPECT_EQ(*MedianTimePast(odd), 3);
    const std::vector<uint32_t> even = {10, 40, 20, 30};
    EXPECT_EQ(*MedianTimePast(even), 20);
    std::vector<uint32_t> long_list;
    for (uint32_t i = 1; i <= 20; ++i) long_list.push_back(i * 10);
    EXPECT_EQ(*MedianTimePast(long_list), 150);  // last 11 are 100..200
    EXPECT_EQ(MedianTimePast({}).error(), MedianError::EmptyList);
    EXPECT_EQ(TimestampWindowView(long_list).MedianTimePast(), 150);
    EXPECT_EQ(TimestampWindowView(even).MedianTimePast(), 20);
}

TEST(MedianTimePast, StrictlyGreaterRequired) {
    const auto params = ChainParams::Regtest();
    const TimestampWindowView view({100, 200, 300});
    const HeaderContext parent{};
    for (const auto& [timestamp, ok] : {std::pair{200u, false}, std::pair{199u, false}, std::pair{201u, true}}) {
        BlockHeader header;
        header.timestamp = timestamp;
        const HeaderValidationContext context{header, parent, view, 0, 1, params};
        EXPECT_EQ(rules::ValidateMedianTimePast(context).has_value(), ok) << timestamp;
    }
}

TEST(TimestampCurrent, ToleranceBoundary) {
    const auto params = ChainParams::Mainnet();
    const TimestampWindowView view;
    const HeaderContext parent{};
    BlockHeader header;
    header.timestamp = 1'000'000 + 7200;
    const HeaderValidationContext ok{header, parent, view, 1'000'000, 1, params};
    EXPECT_TRUE(rules::ValidateTimestampCurrent(ok));
    header.timestamp += 1;
    EXPECT_EQ(rules::ValidateTimestampCurrent(ok).error(), HeaderError::TimestampTooLate);
}

// Difficulty

CompactTarget Retarget(uint32_t bits, uint32_t first_time, uint32_t parent_time, const ChainParams& params) {
    std::vector<uint32_t> timestamps(static_cast<size_t>(params.retarget_interval), first_time);
    timestamps.back() = parent_time;
    BlockHeader parent;
    parent.bits.bits = bits;
    parent.timestamp = parent_time;
    const auto result = AdjustCompactTarget(params.retarget_interval, parent, TimestampWindowView(timestamps), params);
    EXPECT_TRUE(result);
    return *result;
}

TEST(Difficulty, RetargetMatchesReference) {
    const auto mainnet = ChainParams::Mainnet();
    const std::tuple<uint32_t, uint32_t, uint32_t, uint32_t> cases[] = {
        {0x1d00ffff, 0, 1209600, 0x1d00ffff},  {0x1d00ffff, 0, 604800, 0x1c7fff80},
        {0x1d00ffff, 0, 12096000, 0x1d00ffff}, {0x1d00ffff, 0, 1, 0x1c3fffc0},
        {0x1c05a3f4, 1000, 1124200, 0x1c053cd0}, {0x1b0404cb, 5000, 2424217, 0x1b080999},
        {0x207fffff, 0, 3628800, 0x1d00ffff},
    };
    for (const auto& [bits, first, parent, expected] : cases)
        EXPECT_EQ(Retarget(bits, first, parent, mainnet).bits, expected) << std::hex << bits;
    EXPECT_EQ(Retarget(0x207fffff, 0, 604800, ChainParams::Regtest()).bits, 0x203fffffu);
}

TEST(Difficulty, NonBoundaryKeepsParentBits) {
    const auto mainnet = ChainParams::Mainnet();
    BlockHeader parent;
    parent.bits.bits = 0x1b0404cb;
    const TimestampWindowView view({1, 2, 3});
    for (int height : {1, 2015, 2017, 32255, 32257})
        EXPECT_EQ(AdjustCompactTarget(height, parent, view, mainnet)->bits, 0x1b0404cbu) << height;
}

TEST(Difficulty, ClampAndScaleAgreeWithBigIntegers) {
    const auto mainnet = ChainParams::Mainnet();
    const cpp_int limit = ToBig(mainnet.pow_limit);
    test::RandomObjects random(22);
    for (int i = 0; i < 2000; ++i) {
        const uint32_t bits = (static_cast<uint32_t>(random.Int(0x17, 0x1d)) << 24) | (random.U32() & 0x007fffff) | 0x8000;
        const auto target = CompactTarget{bits}.Expand();
        if (!target || *target > mainnet.pow_limit) continue;
        const uint32_t first = random.U32() >> 2;
        const uint32_t actual = random.U32() % (mainnet.target_timespan * 6);
        const int64_t clamped = std::clamp<int64_t>(actual, mainnet.target_timespan / 4, mainnet.target_timespan * 4);
        EXPECT_EQ(ClampTimespan(actual, mainnet), clamped);
        const cpp_int expected = std::min<cpp_int>(ToBig(*target) * clamped / mainnet.target_timespan, limit);
        const auto result = Retarget(bits, first, first + actual, mainnet);
        EXPECT_EQ(*result.Expand(), *CompactTarget::Compress(FromBig(expected))->Expand()) << std::hex << bits;
    }
}

TEST(Difficulty, MinimumDifficultyFlag) {
    auto params = ChainParams::Mainnet();
    BlockHeader header;
    header.bits.bits = 0x1d00ffff;
    BlockHeader parent_header;
    parent_header.bits.bits = 0x1b0404cb;
    const auto parent = HeaderContext::FromHeader(parent_header, 100);
    const TimestampWindowView view({1, 2, 3});
    const HeaderValidationContext context{header, parent, view, 0, 101, params};
    EXPECT_EQ(rules::ValidateDifficultyAdjustment(context).error(), HeaderError::BadDifficultyTransition);
    params.allow_min_difficulty = true;
    EXPECT_TRUE(rules::ValidateDifficultyAdjustment(context));
}

// Block checks

TEST(BlockChecks, SigOpCounting) {
    EXPECT_EQ(CountScriptSigOps(Hex("ac")), 1);
    EXPECT_EQ(CountScriptSigOps(Hex("ad")), 1);
    EXPECT_EQ(CountScriptSigOps(Hex("ae")), 20);
    EXPECT_EQ(CountScriptSigOps(Hex("acadaeaf")), 42);
    EXPECT_EQ(CountScriptSigOps(Hex("01ac")), 0);
    EXPECT_EQ(CountScriptSigOps(Hex("ac02ac")), 1);
    EXPECT_EQ(CountScriptSigOps({}), 0);
}

TEST(BlockChecks, CoinbaseHeightPrefixes) {
    using Bytes = std::vector<std::vector<uint8_t>>;
    EXPECT_EQ(CoinbaseHeightPrefixes(0), Bytes{Hex("00")});
    EXPECT_EQ(CoinbaseHeightPrefixes(1), (Bytes{Hex("51"), Hex("0101")}));
    EXPECT_EQ(CoinbaseHeightPrefixes(16), (Bytes{Hex("60"), Hex("0110")}));
    EXPECT_EQ(CoinbaseHeightPrefixes(17), Bytes{Hex("0111")});
    EXPECT_EQ(CoinbaseHeightPrefixes(128), Bytes{Hex("028000")});
    EXPECT_EQ(CoinbaseHeightPrefixes(227931), Bytes{Hex("035b7a03")});
}

TEST(BlockChecks, CoinbaseHeightAcceptsBothSmallEncodings) {
    for (const auto& prefix : {Hex("51"), Hex("0101")}) {
        Block block;
        block.transactions.push_back(cli::MakeCoinbase(1, 0));
        block.transactions[0].inputs[0].script_sig = prefix;
        block.transactions[0].inputs[0].script_sig.push_back(0x00);
        EXPECT_TRUE(CheckCoinbaseHeight(block, 1));
        EXPECT_FALSE(CheckCoinbaseHeight(block, 2));
    }
}

TEST(BlockChecks, Finality) {
    protocol::Transaction tx;
    tx.inputs.resize(1);
    tx.inputs[0].sequence = 0;
    tx.locktime = 0;
    EXPECT_TRUE(IsFinalTransaction(tx, 10, 0));
    tx.locktime = 10;
    EXPECT_FALSE(IsFinalTransaction(tx, 10, 0));
    EXPECT_TRUE(IsFinalTransaction(tx, 11, 0));
    tx.locktime = 600'000'000;
    EXPECT_FALSE(IsFinalTransaction(tx, 10, 600'000'000));
    EXPECT_TRUE(IsFinalTransaction(tx, 10, 600'000'001));
    tx.inputs[0].sequence = 0xffffffff;
    EXPECT_TRUE(IsFinalTransaction(tx, 10, 0));
}

TEST(BlockChecks, FinalityUsesMedianTimeAfterActivation) {
    auto params = ChainParams::Regtest();
    params.SetActivationHeight(BIP::MedianTimePastLocktime, 50);
    Block block;
    block.header.timestamp = 600'000'500;
    block.transactions.push_back(cli::MakeCoinbase(60, 0));
    block.transactions[0].locktime = 600'000'100;
    block.transactions[0].inputs[0].sequence = 0;
    const TimestampWindowView view(std::vector<uint32_t>(11, 600'000'000));
    EXPECT_EQ(ValidateBlockContext(block, 60, view, params).error(), BlockError::NonFinalTransaction);
    block.transactions[0] = cli::MakeCoinbase(40, 0);
    block.transactions[0].locktime = 600'000'100;
    block.transactions[0].inputs[0].sequence = 0;
    EXPECT_TRUE(ValidateBlockContext(block, 40, view, params));
}

TEST(BlockChecks, WitnessCommitmentLookupTakesLastMatch) {
    Block block;
    block.transactions.push_back(cli::MakeCoinbase(3, 0));
    EXPECT_EQ(FindWitnessCommitment(block), -1);
    std::vector<uint8_t> script(kWitnessCommitmentPrefix.begin(), kWitnessCommitmentPrefix.end());
    script.resize(38, 0x00);
    block.transactions[0].outputs.push_back({0, script});
    block.transactions[0].outputs.push_back({0, {0x51}});
    block.transactions[0].outputs.push_back({0, script});
    EXPECT_EQ(FindWitnessCommitment(block), 3);
    script.resize(37);
    block.transactions[0].outputs.push_back({0, script});
    EXPECT_EQ(FindWitnessCommitment(block), 3);
}

TEST(BlockChecks, WitnessRootUsesZeroCoinbaseLeaf) {
    test::RandomObjects random(23);
    Block block;
    block.transactions.push_back(cli::MakeCoinbase(3, 0));
    block.transactions.push_back(random.Transaction(true));
    const std::vector<protocol::Hash256> leaves = {protocol::Hash256{}, protocol::Wtxid(block.transactions[1])};
    EXPECT_EQ(WitnessMerkleRoot(block), *protocol::MerkleRoot(leaves));
}

TEST(BlockChecks, WitnessDataWithoutCommitmentFails) {
    test::RandomObjects random(24);
    Block block;
    block.transactions.push_back(cli::MakeCoinbase(3, 0));
    EXPECT_TRUE(CheckWitnessCommitment(block));
    auto tx = random.Transaction(false);
    block.transactions.push_back(tx);
    EXPECT_TRUE(CheckWitnessCommitment(block));
    block.transactions[1].inputs[0].witness = {{0x01}};
    EXPECT_EQ(CheckWitnessCommitment(block).error(), BlockError::BadWitnessCommitment);
}

TEST(BlockChecks, WeightBoundary) {
    // A block whose base serialization is exactly 1,000,000 bytes weighs exactly 4,000,000.
    Block block;
    block.transactions.push_back(cli::MakeCoinbase(3, 0));
    const size_t base = protocol::SerializedSize(block, protocol::WitnessMode::Exclude);
    block.transactions[0].outputs[0].script_pubkey.assign(1'000'000 - base + 1 - 4, 0x6a);
    ASSERT_EQ(protocol::SerializedSize(block, protocol::WitnessMode::Exclude), 1'000'000u);
    EXPECT_EQ(protocol::BlockWeight(block), 4'000'000u);
    const TimestampWindowView view(std::vector<uint32_t>(11, 1));
    const BlockValidationContext context{block, 3, view, ChainParams::Regtest()};
    EXPECT_TRUE(rules::ValidateBlockWeight(context));
    block.transactions[0].outputs[0].script_pubkey.push_back(0x6a);
    EXPECT_EQ(rules::ValidateBlockWeight(context).error(), BlockError::OverweightBlock);
}

}  // namespace
}  // namespace hornet::consensus
