// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hornet/consensus/rulesets.hpp"
#include "hornet/data/header_tree.hpp"
#include "hornet/dsl/lower.hpp"
#include "hornet/protocol/fixture.hpp"
#include "hornet/script/processor.hpp"
#include "hornet/util/hex.hpp"

namespace hornet::cli {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int64_t ElapsedMs(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

int64_t DefaultCurrentTime(std::span<const BlockHeader> headers, const ChainParams& params) {
    int64_t latest = 0;
    for (const BlockHeader& header : headers) latest = std::max<int64_t>(latest, header.timestamp);
    const int64_t now = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
    return std::max(now, latest + params.timestamp_tolerance);
}

RunReport ValidateHeaders(std::span<const BlockHeader> headers, const ChainParams& params,
                          const HeaderRunOptions& options) {
    RunReport report;
    report.command = "validate-headers";
    report.params = params.name;
    report.items.reserve(headers.size());
    const int64_t current_time = options.at_time ? *options.at_time : DefaultCurrentTime(headers, params);

    const auto start = Clock::now();
    data::HeaderTree tree;
    for (size_t height = 0; height < headers.size(); ++height) {
        const auto accepted = tree.Empty() ? data::AcceptGenesis(tree, headers[height], params)
                                           : data::AcceptHeader(tree, headers[height], current_time, params);
        if (accepted) {
            report.Add(std::to_string(height));
            continue;
        }
        report.Add(std::to_string(height), data::ToString(accepted.error()));
        if (!options.keep_going) break;
    }
    report.elapsed_ms = ElapsedMs(start);
    return report;
}

std::optional<std::string> ApplyActivations(ChainParams& params, std::span<const std::string> overrides) {
    for (const std::string& text : overrides) {
        const size_t eq = text.find('=');
        if (eq == std::string::npos) return "expected BIP=HEIGHT, got '" + text + "'";
        const auto bip = protocol::ParseBip(std::string_view(text).substr(0, eq));
        if (!bip) return "unknown BIP '" + text.substr(0, eq) + "'";
        int height = 0;
        const std::string_view digits = std::string_view(text).substr(eq + 1);
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), height);
        if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() || height < 0)
            return "bad activation height in '" + text + "'";
        params.SetActivationHeight(*bip, height);
    }
    return std::nullopt;
}

namespace {

struct GlobalOptions {
    bool json = false;
    std::string params = "mainnet";
    bool params_given = false;
    std::vector<std::string> activations;
    bool keep_going = false;
    std::optional<int64_t> at_time;
    uint64_t seed = 0;
};

class Session {
public:
    Session(const GlobalOptions& options, std::ostream& out, std::ostream& err)
        : options_(options), out_(out), err_(err) {}

    // Resolves the preset named on the command line (or fallback) plus --activate overrides.
    std::optional<ChainParams> Params(const std::string& fallback = "mainnet") {
        const std::string name = options_.params_given ? options_.params : fallback;
        auto params = ChainParams::FromName(name);
        if (!params) {
            err_ << "error: unknown params preset '" << name << "'\n";
            return std::nullopt;
        }
        if (auto problem = ApplyActivations(*params, options_.activations)) {
            err_ << "error: " << *problem << '\n';
            return std::nullopt;
        }
        return params;
    }

    int Usage(const std::string& message) {
        err_ << "error: " << message << '\n';
        return kExitUsage;
    }

    // Prints the report and returns the exit code for it.
    int Emit(const RunReport& report, const std::string& summary_suffix = "") {
        if (options_.json) {
            out_ << report.ToJson().dump(2) << '\n';
        } else {
            for (const ReportItem& item : report.items) {
                if (!item.ok) out_ << item.id << ": " << *item.error << '\n';
            }
            out_ << report.command << ": " << report.CountOk() << " ok, " << report.CountErr() << " failed ("
                 << report.elapsed_ms << " ms)" << summary_suffix << '\n';
        }
        return report.CountErr() == 0 ? kExitOk : kExitFailure;
    }

    int ValidateHeadersCommand(const fs::path& file) {
        const auto params = Params();
        if (!params) return kExitUsage;
        const auto headers = protocol::ReadHeaderFixture(file);
        if (!headers) return Usage(headers.error().message);
        const RunReport report = ValidateHeaders(*headers, *params, {options_.at_time, options_.keep_going});
        return Emit(report);
    }

    int BenchHeadersCommand(const fs::path& file, int repeat) {
        const auto params = Params();
        if (!params) return kExitUsage;
        const auto headers = protocol::ReadHeaderFixture(file);
        if (!headers) return Usage(headers.error().message);
        if (repeat < 1) return Usage("--repeat must be at least 1");

        RunReport report;
        report.command = "bench-headers";
        report.params = params->name;
        nlohmann::json runs = nlohmann::json::array();
        double best_rate = 0;
        const auto start = Clock::now();
        for (int run = 0; run < repeat; ++run) {
            const auto run_start = Clock::now();
            const RunReport result = ValidateHeaders(*headers, *params, {options_.at_time, false});
            const double seconds = std::chrono::duration<double>(Clock::now() - run_start).count();
            const double rate = seconds > 0 ? static_cast<double>(result.CountOk()) / seconds : 0.0;
            best_rate = std::max(best_rate, rate);
            runs.push_back({{"headers", result.CountOk()}, {"seconds", seconds}, {"headers_per_second", rate}});
            std::optional<std::string> error;
            if (result.CountErr() != 0) error = result.items.back().error;
            report.Add("run-" + std::to_string(run + 1), error);
        }
        report.elapsed_ms = ElapsedMs(start);
        report.extra["headers"] = headers->size();
        report.extra["runs"] = runs;
        report.extra["headers_per_second"] = best_rate;

        std::ostringstream suffix;
        suffix << "; " << headers->size() << " headers, best " << static_cast<int64_t>(best_rate) << " headers/s";
        return Emit(report, suffix.str());
    }

    int ValidateBlockCommand(const fs::path& block_file, int height, const fs::path& ancestry_file) {
        const auto params = Params();
        if (!params) return kExitUsage;
        if (height < 0) return Usage("--height must be non-negative");
        const auto block = protocol::ReadBlockHex(block_file);
        if (!block) return Usage(block.error().message);
        std::vector<BlockHeader> ancestors;
        if (!ancestry_file.empty()) {
            auto read = protocol::ReadHeaderFixture(ancestry_file);
            if (!read) return Usage(read.error().message);
            ancestors = std::move(*read);
        }
        // A file that holds the parent is cut there; otherwise its last header is taken as the parent.
        const auto parent = std::find_if(ancestors.begin(), ancestors.end(), [&](const BlockHeader& h) {
            return h.ComputeHash() == block->header.previous_block_hash;
        });
        if (parent != ancestors.end()) ancestors.erase(parent + 1, ancestors.end());
        const size_t needed = static_cast<size_t>(std::min(height, consensus::kMedianTimeSpan));
        if (ancestors.size() < needed)
            return Usage("ancestry must hold at least " + std::to_string(needed) + " headers ending at the parent");
        const size_t depth = std::min(ancestors.size(), static_cast<size_t>(height));
        const std::vector<BlockHeader> window(ancestors.end() - static_cast<std::ptrdiff_t>(depth), ancestors.end());

        RunReport report;
        report.command = "validate-block";
        report.params = params->name;
        const auto start = Clock::now();
        const std::string id = "height-" + std::to_string(height);
        std::string rule;
        if (const auto structure = consensus::ValidateBlockStructure(*block, *params); !structure) {
            report.Add(id, consensus::ToString(structure.error()));
            rule = consensus::RuleNameFor(structure.error());
        } else {
            const HeaderListView view(window, static_cast<int>(window.size()) - 1);
            if (const auto context = consensus::ValidateBlockContext(*block, height, view, *params); !context) {
                report.Add(id, std::string(consensus::ToString(context.error())));
                rule = consensus::RuleNameFor(context.error());
            } else {
                report.Add(id);
            }
        }
        report.elapsed_ms = ElapsedMs(start);
        if (!rule.empty()) report.extra["rule"] = rule;
        return Emit(report, rule.empty() ? "" : "; failed rule " + rule);
    }

    int DslCheckCommand(const std::vector<std::string>& files) {
        RunReport report;
        report.command = "dsl check";
        report.params = "-";
        nlohmann::json listing = nlohmann::json::array();
        const auto start = Clock::now();
        for (const std::string& file : files) {
            const auto source = ReadText(file);
            if (!source) return Usage("cannot read " + file);
            const auto result = dsl::Compile(*source);
            std::optional<std::string> first_error;
            for (const dsl::Diagnostic& d : result.diagnostics) {
                if (!options_.json) out_ << dsl::Format(file, d) << '\n';
                listing.push_back({{"file", file},
                                   {"line", d.pos.line},
                                   {"column", d.pos.column},
                                   {"severity", std::string(dsl::ToString(d.severity))},
                                   {"code", d.code},
                                   {"message", d.message}});
                if (d.severity == dsl::Severity::Error && !first_error) first_error = d.code;
            }
            report.Add(file, first_error);
        }
        report.elapsed_ms = ElapsedMs(start);
        report.extra["diagnostics"] = listing;
        return Emit(report);
    }

    int DslDiffCommand(const std::string& source_file, const fs::path& corpus_dir) {
        const auto source = ReadText(source_file);
        if (!source) return Usage("cannot read " + source_file);
        auto corpus = ReadCorpus(corpus_dir);
        if (!corpus) return Usage(corpus.error());
        auto params = Params(corpus->params_name);
        if (!params) return kExitUsage;
        if (!options_.params_given) {
            for (const auto& [bip, height] : corpus->activations) params->SetActivationHeight(bip, height);
            if (auto problem = ApplyActivations(*params, options_.activations)) return Usage(*problem);
        }

        RunReport report;
        report.command = "dsl diff";
        report.params = params->name;
        const auto start = Clock::now();
        const auto compiled = dsl::Compile(*source);
        for (const dsl::Diagnostic& d : compiled.diagnostics) err_ << dsl::Format(source_file, d) << '\n';
        if (!compiled.Ok()) {
            report.Add(source_file, std::string("diagnostics"));
            report.elapsed_ms = ElapsedMs(start);
            return Emit(report);
        }
        for (const dsl::LoweredRuleset& lowered : compiled.rulesets) {
            const std::string phase = lowered.phase.value_or(std::string(dsl::PhaseFor(lowered.domain)));
            if (phase != dsl::PhaseFor(lowered.domain)) {
                report.Add(lowered.name, "phase '" + phase + "' does not match error type " +
                                             std::string(dsl::ToString(lowered.domain)));
                continue;
            }
            const dsl::DifferentialReport diff = RunDifferential(lowered, *corpus, *params);
            for (const dsl::Mismatch& m : diff.mismatches)
                report.Add(lowered.name + ":" + m.id, "native=" + m.native + " lowered=" + m.lowered);
            if (diff.Passed()) report.Add(lowered.name + ":" + std::to_string(diff.checked) + "-checked");
        }
        report.elapsed_ms = ElapsedMs(start);
        return Emit(report);
    }

    int MineFixtureCommand(const fs::path& out_dir, int length, const std::vector<std::string>& fork_specs,
                           int violators) {
        const auto params = Params("regtest");
        if (!params) return kExitUsage;
        MineOptions options;
        options.length = length;
        options.seed = options_.seed;
        options.violators_per_rule = violators;
        for (const std::string& text : fork_specs) {
            const auto spec = ParseForkSpec(text);
            if (!spec) return Usage("bad fork spec '" + text + "', expected fork@HEIGHT+LENGTH");
            options.forks.push_back(*spec);
        }
        RunReport report;
        report.command = "mine-fixture";
        report.params = params->name;
        const auto start = Clock::now();
        const auto fixture = MineFixture(*params, options);
        if (!fixture) return Usage(fixture.error());
        if (auto written = WriteCorpus(out_dir, *params, options, *fixture); !written) return Usage(written.error());
        report.Add("chain-" + std::to_string(fixture->blocks.size()));
        for (const Fork& fork : fixture->forks) report.Add(fork.spec.ToString());
        for (const CorpusBlock& extra : fixture->extras) report.Add(extra.id);
        report.elapsed_ms = ElapsedMs(start);
        report.extra["out"] = out_dir.string();
        return Emit(report);
    }

    int ScriptRunCommand(const std::string& hex, bool minimal) {
        const auto bytes = util::FromHex(hex);
        if (!bytes) return Usage("script is not valid hex");
        RunReport report;
        report.command = "script run";
        report.params = minimal ? "minimal" : "default";
        const auto start = Clock::now();
        const auto result = script::Processor(*bytes, {minimal}).Run();
        if (!result) {
            report.Add("script", std::string(script::ToString(result.error())));
        } else {
            report.Add("script", *result ? std::nullopt : std::optional<std::string>("false"));
        }
        report.elapsed_ms = ElapsedMs(start);
        if (result) report.extra["result"] = *result;
        if (!options_.json && result) out_ << (*result ? "true" : "false") << '\n';
        return Emit(report);
    }

private:
    static std::optional<std::string> ReadText(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    dsl::DifferentialReport RunDifferential(const dsl::LoweredRuleset& lowered, const Corpus& corpus,
                                            const ChainParams& params) {
        using namespace consensus;
        const auto& headers = corpus.headers;
        switch (lowered.domain) {
            case dsl::ErrorDomain::HeaderError: {
                const int64_t now = options_.at_time.value_or(DefaultCurrentTime(headers, params));
                std::vector<HeaderContext> parents;
                std::vector<HeaderListView> views;
                std::vector<HeaderValidationContext> contexts;
                parents.reserve(headers.size());
                views.reserve(headers.size());
                contexts.reserve(headers.size());
                std::vector<dsl::CorpusItem<HeaderValidationContext>> items;
                for (size_t h = 1; h < headers.size(); ++h) {
                    parents.push_back(HeaderContext::FromHeader(headers[h - 1], static_cast<int>(h) - 1));
                    views.emplace_back(headers, static_cast<int>(h) - 1);
                    contexts.push_back({headers[h], parents.back(), views.back(), now, static_cast<int>(h), params});
                }
                for (size_t i = 0; i < contexts.size(); ++i)
                    items.push_back({"header-" + std::to_string(i + 1), &contexts[i]});
                return dsl::DifferentialCheck<HeaderValidationContext, HeaderError>(lowered, HeaderRuleset(), items);
            }
            case dsl::ErrorDomain::TransactionError: {
                std::vector<TransactionValidationContext> contexts;
                std::vector<std::string> ids;
                for (const CorpusBlock& block : corpus.blocks) {
                    for (size_t i = 0; i < block.block.transactions.size(); ++i) {
                        contexts.push_back({block.block.transactions[i], params});
                        ids.push_back(block.id + "/tx" + std::to_string(i));
                    }
                }
                std::vector<dsl::CorpusItem<TransactionValidationContext>> items;
                for (size_t i = 0; i < contexts.size(); ++i) items.push_back({ids[i], &contexts[i]});
                return dsl::DifferentialCheck<TransactionValidationContext, TransactionError>(
                    lowered, TransactionRuleset(), items);
            }
            case dsl::ErrorDomain::BlockOrTransactionError: {
                std::vector<BlockStructureContext> contexts;
                for (const CorpusBlock& block : corpus.blocks) contexts.push_back({block.block, params});
                std::vector<dsl::CorpusItem<BlockStructureContext>> items;
                for (size_t i = 0; i < contexts.size(); ++i) items.push_back({corpus.blocks[i].id, &contexts[i]});
                return dsl::DifferentialCheck<BlockStructureContext, BlockOrTransactionError>(
                    lowered, BlockStructureRuleset(), items);
            }
            case dsl::ErrorDomain::BlockError: {
                std::vector<HeaderListView> views;
                std::vector<BlockValidationContext> contexts;
                views.reserve(corpus.blocks.size());
                contexts.reserve(corpus.blocks.size());
                std::vector<dsl::CorpusItem<BlockValidationContext>> items;
                for (const CorpusBlock& block : corpus.blocks) {
                    if (block.height > static_cast<int>(headers.size())) continue;
                    views.emplace_back(headers, block.height - 1);
                    contexts.push_back({block.block, block.height, views.back(), params});
                    items.push_back({block.id, &contexts.back()});
                }
                return dsl::DifferentialCheck<BlockValidationContext, BlockError>(lowered, BlockContextRuleset(),
                                                                                 items);
            }
        }
        return {};
    }

    const GlobalOptions& options_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int RunCommandLine(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Executable specification of Bitcoin consensus rules", "hornet-spec"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_flag("--json", global.json, "Print a JSON report");
    app.add_option("--params", global.params, "Chain parameter preset: mainnet or regtest");
    app.add_option("--activate", global.activations, "Override a BIP activation height, e.g. BIP34=100");
    app.add_flag("--keep-going", global.keep_going, "Continue past the first validation failure");
    app.add_option("--at-time", global.at_time, "Validation clock as a UNIX timestamp");
    app.add_option("--seed", global.seed, "Seed for deterministic generation");

    fs::path headers_file;
    auto* validate_headers = app.add_subcommand("validate-headers", "Validate a binary header fixture");
    validate_headers->add_option("file", headers_file, "Concatenated 80-byte headers")->required();

    fs::path block_file;
    fs::path ancestry_file;
    int block_height = 0;
    auto* validate_block = app.add_subcommand("validate-block", "Validate one hex-encoded block");
    validate_block->add_option("block", block_file, "Hex block file")->required();
    validate_block->add_option("--height", block_height, "Height of the block")->required();
    validate_block->add_option("--ancestry", ancestry_file, "Header fixture ending at the parent");

    auto* dsl_command = app.add_subcommand("dsl", "Check DSL sources or diff them against native rulesets");
    dsl_command->require_subcommand(1);
    std::vector<std::string> dsl_files;
    auto* dsl_check = dsl_command->add_subcommand("check", "Lex, parse and analyze");
    dsl_check->add_option("files", dsl_files, "DSL sources")->required();
    std::string diff_source;
    fs::path diff_corpus;
    auto* dsl_diff = dsl_command->add_subcommand("diff", "Differential run against the native ruleset");
    dsl_diff->add_option("source", diff_source, "DSL source")->required();
    dsl_diff->add_option("corpus", diff_corpus, "Directory written by mine-fixture")->required();

    fs::path mine_out;
    int mine_length = 0;
    int mine_violators = 0;
    std::vector<std::string> fork_specs;
    auto* mine = app.add_subcommand("mine-fixture", "Mine a deterministic synthetic chain");
    mine->add_option("--out", mine_out, "Output directory")->required();
    mine->add_option("--length", mine_length, "Number of main-chain blocks including genesis")->required();
    mine->add_option("--fork", fork_specs, "Fork spec such as fork@50+3");
    mine->add_option("--violators", mine_violators, "Violator blocks per block-context rule");

    fs::path bench_file;
    int bench_repeat = 1;
    auto* bench = app.add_subcommand("bench-headers", "Measure header validation throughput");
    bench->add_option("file", bench_file, "Concatenated 80-byte headers")->required();
    bench->add_option("--repeat", bench_repeat, "Number of timed runs");

    auto* script_command = app.add_subcommand("script", "Run scripts on the stack machine");
    script_command->require_subcommand(1);
    std::string script_hex;
    bool script_minimal = false;
    auto* script_run = script_command->add_subcommand("run", "Execute a hex-encoded script");
    script_run->add_option("hex", script_hex, "Script bytes as hex")->required();
    script_run->add_flag("--minimal", script_minimal, "Require minimal pushes");

    std::vector<const char*> argv{"hornet-spec"};
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    global.params_given = app.count("--params") > 0;

    Session session(global, out, err);
    if (*validate_headers) return session.ValidateHeadersCommand(headers_file);
    if (*validate_block) return session.ValidateBlockCommand(block_file, block_height, ancestry_file);
    if (*dsl_check) return session.DslCheckCommand(dsl_files);
    if (*dsl_diff) return session.DslDiffCommand(diff_source, diff_corpus);
    if (*mine) return session.MineFixtureCommand(mine_out, mine_length, fork_specs, mine_violators);
    if (*bench) return session.BenchHeadersCommand(bench_file, bench_repeat);
    if (*script_run) return session.ScriptRunCommand(script_hex, script_minimal);
    return session.Usage("no command given");
}

}  // namespace hornet::cli
