// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hornet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct ReportItem {
    std::string id;
    bool ok = true;
    std::optional<std::string> error;
};

// Schema 1: {command, params, items[{id, ok, error}], count_ok, count_err, elapsed_ms, schema}.
// Commands may attach extra top-level fields.
struct RunReport {
    std::string command;
    std::string params;
    std::vector<ReportItem> items;
    int64_t elapsed_ms = 0;
    nlohmann::json extra = nlohmann::json::object();

    void Add(std::string id, std::optional<std::string> error = std::nullopt) {
        const bool ok = !error.has_value();
        items.push_back({std::move(id), ok, std::move(error)});
    }

    size_t CountOk() const;
    size_t CountErr() const;
    nlohmann::json ToJson() const;
};

}  // namespace hornet::cli
