// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/cli/report.hpp"

#include <algorithm>

namespace hornet::cli {

size_t RunReport::CountOk() const {
    return static_cast<size_t>(std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.ok; }));
}

size_t RunReport::CountErr() const { return items.size() - CountOk(); }

nlohmann::json RunReport::ToJson() const {
    nlohmann::json json;
    json["command"] = command;
    json["params"] = params;
    nlohmann::json list = nlohmann::json::array();
    for (const ReportItem& item : items) {
        list.push_back({{"id", item.id},
                        {"ok", item.ok},
                        {"error", item.error ? nlohmann::json(*item.error) : nlohmann::json(nullptr)}});
    }
    json["items"] = std::move(list);
    json["count_ok"] = CountOk();
    json["count_err"] = CountErr();
    json["elapsed_ms"] = elapsed_ms;
    json["schema"] = 1;
    for (const auto& [key, value] : extra.items()) json[key] = value;
    return json;
}

}  // namespace hornet::cli
