// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornet/cli/fixture_miner.hpp"
#include "hornet/cli/report.hpp"
#include "hornet/protocol/block_header.hpp"
#include "hornet/protocol/chain_params.hpp"

namespace hornet::cli {

struct HeaderRunOptions {
    std::optional<int64_t> at_time;
    bool keep_going = false;
};

// The validation clock used when no time is given: max(now, latest timestamp + tolerance).
int64_t DefaultCurrentTime(std::span<const BlockHeader> headers, const ChainParams& params);

// Validates headers in height order through a header tree. The first header seeds the
// tree as genesis. Stops at the first failure unless keep_going is set.
RunReport ValidateHeaders(std::span<const BlockHeader> headers, const ChainParams& params,
                          const HeaderRunOptions& options);

// Applies "BIP34=227931" style overrides. Returns an error message on bad syntax.
std::optional<std::string> ApplyActivations(ChainParams& params, std::span<const std::string> overrides);

// Entry point behind the hornet-spec executable. args excludes the program name.
int RunCommandLine(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hornet::cli
