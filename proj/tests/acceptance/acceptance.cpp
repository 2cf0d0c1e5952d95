// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hornet/cli/fixture_miner.hpp"
#include "hornet/consensus/difficulty.hpp"
#include "hornet/consensus/rulesets.hpp"
#include "hornet/data/header_tree.hpp"
#include "hornet/data/keyframe_sidecar.hpp"
#include "hornet/dsl/lower.hpp"
#include "hornet/protocol/fixture.hpp"
#include "hornet/protocol/hashing.hpp"
#include "hornet/script/processor.hpp"
#include "hornet/script/script_num.hpp"
#include "hornet/script/writer.hpp"
#include "hornet/util/hex.hpp"
#include "random_objects.hpp"
#include "rule_cases.hpp"
#include "tree_oracle.hpp"

namespace {

using namespace hornet;
using protocol::BlockHeader;
using protocol::ChainParams;
using Clock = std::chrono::steady_clock;

constexpr size_t kMainnetFixtureHeaders = 54'432;

int g_failed = 0;

void Report(int id, std::string_view name, bool pass, const std::string& detail) {
    std::printf("%s [%d] %.*s: %s\n", pass ? "PASS" : "FAIL", id, static_cast<int>(name.size()), name.data(),
                detail.c_str());
    std::fflush(stdout);
    g_failed += !pass;
}

double MillisSince(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

std::filesystem::path MainnetFixturePath() {
    if (const char* env = std::getenv("HORNET_MAINNET_FIXTURE")) return env;
    return HORNET_TEST_DATA_DIR "/mainnet-headers-0-54431.bin";
}

std::vector<BlockHeader> LoadPrefix() {
    auto headers = protocol::ReadHeaderFixture(HORNET_TEST_DATA_DIR "/mainnet-headers-0-1111.bin");
    return headers ? *headers : std::vector<BlockHeader>{};
}

std::optional<std::vector<BlockHeader>> LoadMainnetFixture() {
    const auto path = MainnetFixturePath();
    if (!std::filesystem::exists(path)) return std::nullopt;
    auto headers = protocol::ReadHeaderFixture(path);
    if (!headers) return std::nullopt;
    return *headers;
}

// Full header pipeline: every header goes through the tree and the header ruleset.
std::optional<std::string> AcceptAll(const std::vector<BlockHeader>& headers, const ChainParams& params) {
    data::HeaderTree tree;
    if (headers.empty()) return "empty fixture";
    if (!data::AcceptGenesis(tree, headers[0], params)) return "genesis rejected";
    const int64_t now = headers.back().timestamp;
    for (size_t h = 1; h < headers.size(); ++h) {
        const auto added = data::AcceptHeader(tree, headers[h], now, params);
        if (!added) return Fmt("height %zu: %s", h, data::ToString(added.error()).c_str());
    }
    return std::nullopt;
}

void MainnetFixture(const std::optional<std::vector<BlockHeader>>& fixture, const std::vector<BlockHeader>& prefix) {
    const auto params = ChainParams::Mainnet();
    const auto prefix_start = Clock::now();
    const auto prefix_error = AcceptAll(prefix, params);
    const std::string prefix_note = Fmt("%zu-header mainnet prefix %s in %.1f ms", prefix.size(),
                                        prefix_error ? prefix_error->c_str() : "validates", MillisSince(prefix_start));
    if (!fixture) {
        Report(1, "mainnet header fixture", false,
               Fmt("%s not present; %s", MainnetFixturePath().string().c_str(), prefix_note.c_str()));
        return;
    }
    const auto start = Clock::now();
    const auto error = AcceptAll(*fixture, params);
    const double ms = MillisSince(start);
    const bool pass = fixture->size() == kMainnetFixtureHeaders && !error && ms < 2000.0;
    Report(1, "mainnet header fixture", pass,
           Fmt("%zu headers, %s, %.1f ms", fixture->size(), error ? error->c_str() : "zero errors", ms));
}

void RetargetCorrectness(const std::optional<std::vector<BlockHeader>>& fixture, const std::vector<BlockHeader>& prefix) {
    const auto params = ChainParams::Mainnet();
    const auto& headers = fixture ? *fixture : prefix;
    size_t change = 0;
    for (size_t h = 1; h < headers.size() && change == 0; ++h)
        if (headers[h].bits != headers[h - 1].bits) change = h;
    if (change == 0) {
        Report(2, "retarget correctness", false,
               Fmt("no bits change within %zu available headers (first mainnet change lies beyond the prefix)",
                   headers.size()));
        return;
    }
    const cli::HeaderListView view(headers, static_cast<int>(change) - 1);
    const auto computed = consensus::AdjustCompactTarget(static_cast<int>(change), headers[change - 1], view, params);
    const bool pass = fixture.has_value() && computed && *computed == headers[change].bits;
    Report(2, "retarget correctness", pass,
           Fmt("height %zu: computed %08x, fixture %08x", change, computed ? computed->bits : 0u,
               headers[change].bits.bits));
}

using dsl::Verdict;

std::string Verdict(const util::Expected<bool, script::ScriptError>& result) {
    if (!result) return std::string(script::ToString(result.error()));
    return *result ? "true" : "false";
}

void MutationSuite(const std::vector<BlockHeader>& headers) {
    const auto params = ChainParams::Mainnet();
    test::RandomObjects random(3);
    const int64_t now = headers.back().timestamp;
    std::map<std::string, int> outcomes[3];
    int exact[3] = {0, 0, 0};
    int false_accepts = 0;
    for (int sample = 0; sample < 100; ++sample) {
        const int h = random.Int(1, static_cast<int>(headers.size()) - 1);
        const auto parent = consensus::HeaderContext::FromHeader(headers[h - 1], h - 1);
        const cli::HeaderListView view(headers, h - 1);
        if (!consensus::ValidateHeader(headers[h], parent, view, now, params)) {
            ++false_accepts;  // unmutated header must pass; counted as a harness fault
            continue;
        }
        BlockHeader prev = headers[h];
        prev.previous_block_hash.MutableBytes()[static_cast<size_t>(random.Int(0, 31))] ^= static_cast<uint8_t>(random.Int(1, 255));
        BlockHeader bits = headers[h];
        bits.bits.bits ^= 1u << random.Int(0, 31);
        BlockHeader early = headers[h];
        early.timestamp = static_cast<uint32_t>(view.MedianTimePast() - random.Int(0, 3600));

        const std::string verdicts[3] = {Verdict(consensus::ValidateHeader(prev, parent, view, now, params)),
                                         Verdict(consensus::ValidateHeader(bits, parent, view, now, params)),
                                         Verdict(consensus::ValidateHeader(early, parent, view, now, params))};
        for (int k = 0; k < 3; ++k) {
            ++outcomes[k][verdicts[k]];
            false_accepts += verdicts[k] == "ok";
        }
        exact[0] += verdicts[0] == "ParentNotFound";
        exact[1] += verdicts[1] == "BadDifficultyTransition" || verdicts[1] == "InvalidProofOfWork";
        exact[2] += verdicts[2] == "TimestampTooEarly";
    }
    auto describe = [](const std::map<std::string, int>& counts) {
        std::string out;
        for (const auto& [verdict, count] : counts) out += (out.empty() ? "" : ",") + verdict + "=" + std::to_string(count);
        return out;
    };
    const bool pass = exact[0] == 100 && exact[1] == 100 && exact[2] == 100 && false_accepts == 0;
    Report(3, "header mutation suite", pass,
           Fmt("prev-hash {%s} bits {%s} timestamp {%s} false accepts %d", describe(outcomes[0]).c_str(),
               describe(outcomes[1]).c_str(), describe(outcomes[2]).c_str(), false_accepts));
}

std::vector<int> g_probe_log;
int g_probe_fail_at = -1;

template <int N>
consensus::ValidationResult<consensus::BlockError> Probe(const consensus::BlockValidationContext&) {
    g_probe_log.push_back(N);
    if (N == g_probe_fail_at) return consensus::BlockError::EmptyBlock;
    return {};
}

void RuleEngineProperties() {
    using consensus::BlockContextRule;
    int failures = 0;

    const std::array<BlockContextRule, 5> ruleset = {BlockContextRule{Probe<0>}, BlockContextRule{Probe<1>},
                                                     BlockContextRule{Probe<2>}, BlockContextRule{Probe<3>},
                                                     BlockContextRule{Probe<4>}};
    const protocol::Block empty;
    const consensus::TimestampWindowView no_ancestors;
    auto params = ChainParams::Regtest();
    const consensus::BlockValidationContext probe_context{empty, 0, no_ancestors, params};
    for (int fail = -1; fail < 5; ++fail) {
        g_probe_log.clear();
        g_probe_fail_at = fail;
        const auto result = consensus::ValidateRules<consensus::BlockError>(
            std::span<const BlockContextRule>(ruleset), 0, probe_context);
        const int ran = fail < 0 ? 5 : fail + 1;
        failures += result.has_value() != (fail < 0) || static_cast<int>(g_probe_log.size()) != ran;
    }
    const int early_exit_failures = failures;

    test::RandomObjects random(2025);
    int nondeterministic = 0;
    for (int i = 0; i < 1000; ++i) {
        BlockHeader header = random.Header();
        if (random.Chance(50)) header.bits.bits = 0x207fffff;
        const auto parent = consensus::HeaderContext::FromHeader(random.Header(), random.Int(0, 5000));
        if (random.Chance(50)) header.previous_block_hash = parent.hash;
        std::vector<uint32_t> timestamps;
        for (int k = random.Int(1, 11); k > 0; --k) timestamps.push_back(random.U32());
        const consensus::TimestampWindowView view(timestamps);
        const int64_t now = random.U32();
        const auto block = random.Block(random.Chance(50));
        const std::string first = Verdict(consensus::ValidateHeader(header, parent, view, now, params)) + "/" +
                                  Verdict(consensus::ValidateBlockStructure(block, params)) + "/" +
                                  Verdict(consensus::ValidateBlockContext(block, parent.height, view, params));
        const std::string second = Verdict(consensus::ValidateHeader(header, parent, view, now, params)) + "/" +
                                   Verdict(consensus::ValidateBlockStructure(block, params)) + "/" +
                                   Verdict(consensus::ValidateBlockContext(block, parent.height, view, params));
        nondeterministic += first != second;
    }

    int gating_failures = 0;
    params.SetActivationHeight(protocol::BIP::SegWit, 100);
    const std::array<BlockContextRule, 3> gated = {BlockContextRule{Probe<0>},
                                                   BlockContextRule{Probe<1>, protocol::BIP::SegWit},
                                                   BlockContextRule{Probe<2>}};
    g_probe_fail_at = -1;
    for (const int height : {99, 100}) {
        g_probe_log.clear();
        const consensus::BlockValidationContext context{empty, height, no_ancestors, params};
        gating_failures += !consensus::ValidateRules<consensus::BlockError>(std::span<const BlockContextRule>(gated),
                                                                             height, context);
        const std::vector<int> expected = height == 99 ? std::vector<int>{0, 2} : std::vector<int>{0, 1, 2};
        gating_failures += g_probe_log != expected;
    }
    auto coinbase_params = ChainParams::Regtest();
    coinbase_params.SetActivationHeight(protocol::BIP::HeightInCoinbase, 300);
    const consensus::TimestampWindowView window(std::vector<uint32_t>(11, 1'700'000'000));
    protocol::Block block;
    block.transactions.push_back(cli::MakeCoinbase(5, 1));
    gating_failures += !consensus::ValidateBlockContext(block, 299, window, coinbase_params).has_value();
    gating_failures += consensus::ValidateBlockContext(block, 300, window, coinbase_params).has_value();

    Report(4, "rule-engine properties", early_exit_failures == 0 && nondeterministic == 0 && gating_failures == 0,
           Fmt("early-exit faults %d, nondeterministic contexts %d/1000, gating faults %d", early_exit_failures,
               nondeterministic, gating_failures));
}

void ChainTreeOracle() {
    int divergences = 0, partition_checks = 0, promotes = 0, failing_seeds = 0;
    std::string first;
    const auto start = Clock::now();
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        const auto stats = test::RunTreeOracle(seed, 10'000);
        divergences += stats.divergences;
        partition_checks += stats.partition_checks;
        promotes += stats.promotes;
        if (stats.divergences > 0) {
            ++failing_seeds;
            if (first.empty()) first = Fmt("seed %llu: %s", static_cast<unsigned long long>(seed), stats.first_divergence.c_str());
        }
    }
    const bool pass = divergences == 0 && promotes > 0 && partition_checks >= promotes;
    Report(5, "chain-tree oracle equivalence", pass,
           Fmt("100 seeds x 10000 steps, %d divergences in %d seeds, %d promotes, %d partition checks, %.0f ms%s%s",
               divergences, failing_seeds, promotes, partition_checks, MillisSince(start), first.empty() ? "" : "; ",
               first.c_str()));
}

protocol::Hash256 Label(const std::string& text) {
    return protocol::DoubleSha256(std::span(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

void KeyframeCompression() {
    data::ChainTree<int> tree;
    std::optional<data::NodeRef> tip;
    for (int h = 0; h < 10'000; ++h)
        tip = *tree.Add(tip, data::NodeContext<int>{h, Label("main-" + std::to_string(h)), h});
    data::KeyframeSidecar<int> status(tree, 0);
    tree.AddObserver(&status);
    int errors = 0;
    for (int h = 0; h < 10'000; ++h) errors += !status.Set(h, tree.ChainHashAt(h), 7).has_value();
    const size_t keyframes = status.KeyframeCount();

    // Displaced branch 9997..9999 carries distinct statuses; the winning branch forks at 9996.
    const std::vector<protocol::Hash256> displaced = {tree.ChainHashAt(9997), tree.ChainHashAt(9998),
                                                      tree.ChainHashAt(9999)};
    for (int i = 0; i < 3; ++i) errors += !status.Set(9997 + i, displaced[static_cast<size_t>(i)], 100 + i).has_value();
    std::optional<data::NodeRef> branch = data::NodeRef{data::Placement::Chain, 9996, tree.ChainHashAt(9996)};
    std::vector<protocol::Hash256> winners;
    for (int h = 9997; h <= 10'000; ++h) {
        const auto added = tree.Add(branch, data::NodeContext<int>{h, Label("fork-" + std::to_string(h)), h});
        if (!added) return Report(6, "keyframe sidecar compression", false, "fork add failed");
        branch = *added;
        winners.push_back(added->hash);
        errors += !status.Set(h, added->hash, 200 + h - 9997).has_value();
    }
    const auto promoted = tree.PromoteBranch(*branch, displaced);
    if (!promoted) return Report(6, "keyframe sidecar compression", false, "promote failed");

    int wrong_reads = 0;
    for (int h = 0; h < 9997; ++h) wrong_reads += status.Get(h, tree.ChainHashAt(h)) != 7;
    for (int i = 0; i < 4; ++i) {
        wrong_reads += tree.ChainHashAt(9997 + i) != winners[static_cast<size_t>(i)];
        wrong_reads += status.Get(9997 + i, tree.ChainHashAt(9997 + i)) != 200 + i;
    }
    for (int i = 0; i < 3; ++i) wrong_reads += status.Get(9997 + i, displaced[static_cast<size_t>(i)]) != 100 + i;
    tree.RemoveObserver(&status);
    Report(6, "keyframe sidecar compression", keyframes <= 2 && errors == 0 && wrong_reads == 0,
           Fmt("%zu keyframes after 10000 uniform sets, 3-block reorg: %d wrong reads, %d set errors", keyframes,
               wrong_reads, errors));
}

std::string ReadFile(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void DslEquivalence() {
    const auto params = ChainParams::Regtest();
    const auto compiled = dsl::Compile(ReadFile(HORNET_RULES_DIR "/block_context.hornet"));
    if (!compiled.Ok() || compiled.rulesets.size() != 1)
        return Report(7, "dsl equivalence", false, "listing failed to compile");
    const auto fixture = cli::MineFixture(params, {.length = 1000, .seed = 7, .violators_per_rule = 10});
    if (!fixture) return Report(7, "dsl equivalence", false, "mining failed: " + fixture.error());
    const auto headers = fixture->Headers();

    std::vector<std::unique_ptr<cli::HeaderListView>> views;
    std::vector<std::unique_ptr<consensus::BlockValidationContext>> contexts;
    std::vector<dsl::CorpusItem<consensus::BlockValidationContext>> items;
    auto push = [&](std::string id, const protocol::Block& block, int height) {
        views.push_back(std::make_unique<cli::HeaderListView>(headers, height - 1));
        contexts.push_back(std::make_unique<consensus::BlockValidationContext>(
            consensus::BlockValidationContext{block, height, *views.back(), params}));
        items.push_back({std::move(id), contexts.back().get()});
    };
    for (size_t h = 0; h < fixture->blocks.size(); ++h)
        push("main-" + std::to_string(h), fixture->blocks[h], static_cast<int>(h));
    for (const auto& extra : fixture->extras) push(extra.id, extra.block, extra.height);

    std::map<std::string, int> native_failures;
    for (const auto& item : items) {
        const auto verdict = Verdict(consensus::ValidateRules<consensus::BlockError>(
            consensus::BlockContextRuleset(), item.context->height, *item.context));
        if (verdict != "ok") ++native_failures[verdict];
    }
    const auto report = dsl::DifferentialCheck<consensus::BlockValidationContext, consensus::BlockError>(
        compiled.rulesets[0], consensus::BlockContextRuleset(), items);
    std::string failures;
    for (const auto& [verdict, count] : native_failures)
        failures += (failures.empty() ? "" : ",") + verdict + "=" + std::to_string(count);
    const bool covers_all = native_failures.size() == 4;
    Report(7, "dsl equivalence", report.Passed() && report.checked >= 1000 && covers_all,
           Fmt("%zu blocks checked, %zu mismatches, violators {%s}", report.checked, report.mismatches.size(),
               failures.c_str()));
}

void ScriptVm() {
    using namespace script;
    constexpr ExecutionFlags minimal{.requires_minimal = true};
    std::vector<std::string> faults;
    const auto program = Writer{}.PushInt(21).PushInt(21).Then(Op::Add).PushInt(42).Then(Op::Equal).Release();
    if (util::ToHex(program) != "0115011593012a87" || Verdict(Processor(program).Run()) != "true")
        faults.push_back("addition program");
    const auto non_minimal = Processor(*util::FromHex("0110"), minimal).Run();
    if (non_minimal || non_minimal.error() != ScriptError::NonMinimalPush) faults.push_back("minimality");
    const auto underflow = Processor(Writer{}.PushInt(5).Then(Op::Add).Release()).Run();
    if (underflow || underflow.error() != ScriptError::StackUnderflow) faults.push_back("underflow");
    const auto zero = Processor(Writer{}.PushInt(0).Release()).Run();
    if (!zero || *zero) faults.push_back("falsy zero");

    test::RandomObjects random(42);
    int disagreements = 0;
    for (int i = 0; i < 10'000; ++i) {
        int64_t a = static_cast<int32_t>(random.U32()), b = static_cast<int32_t>(random.U32());
        if (a == INT32_MIN) a = -INT32_MAX;
        if (b == INT32_MIN) b = -INT32_MAX;
        const auto stack = Processor(Writer{}.PushInt(a).PushInt(b).Then(Op::Add).Release(), minimal).Execute();
        disagreements += !stack || stack->Size() != 1 || stack->Top() != EncodeScriptNum(a + b);
    }
    std::string fault_list;
    for (const auto& fault : faults) fault_list += " " + fault;
    Report(8, "script vm", faults.empty() && disagreements == 0,
           Fmt("fixed cases %zu faults%s, random additions %d/10000 disagree", faults.size(), fault_list.c_str(),
               disagreements));
}

void BlockRulesets() {
    const auto cases = test::BuildRuleCases();
    int green = 0;
    std::string red;
    for (const auto& rule_case : cases) {
        const std::string violated = rule_case.violator();
        const std::string repaired = rule_case.repaired();
        green += violated == rule_case.expected_error;
        green += repaired == "ok";
        if (violated != rule_case.expected_error || repaired != "ok")
            red += " " + rule_case.rule + "(" + violated + "/" + repaired + ")";
    }
    Report(9, "block rulesets", cases.size() == 23 && green == 46,
           Fmt("%zu rules, %d/%zu cases green%s", cases.size(), green, cases.size() * 2, red.c_str()));
}

}  // namespace

int main() {
    const auto prefix = LoadPrefix();
    if (prefix.empty()) {
        std::printf("FAIL [0] setup: mainnet prefix fixture missing\n");
        return 1;
    }
    const auto fixture = LoadMainnetFixture();
    MainnetFixture(fixture, prefix);
    RetargetCorrectness(fixture, prefix);
    MutationSuite(fixture ? *fixture : prefix);
    RuleEngineProperties();
    ChainTreeOracle();
    KeyframeCompression();
    DslEquivalence();
    ScriptVm();
    BlockRulesets();
    std::printf("%d of 9 criteria failed\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
