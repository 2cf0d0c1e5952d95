// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/consensus/ancestry.hpp"

#include <algorithm>
#include <array>

namespace hornet::consensus {

util::Expected<int64_t, MedianError> MedianTimePast(std::span<const uint32_t> timestamps) {
    if (timestamps.empty()) return MedianError::EmptyList;
    std::array<uint32_t, kMedianTimeSpan> sorted{};
    const size_t n = std::min<size_t>(timestamps.size(), kMedianTimeSpan);
    std::copy_n(timestamps.end() - n, n, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + n);
    return int64_t{sorted[(n - 1) / 2]};
}

int64_t AncestorView::MedianTimePast() const {
    std::array<uint32_t, kMedianTimeSpan> window{};
    const int n = std::min(Depth(), kMedianTimeSpan);
    if (n == 0) return 0;
    for (int i = 0; i < n; ++i) window[i] = TimestampAtOffset(n - 1 - i);
    return *consensus::MedianTimePast(std::span(window.data(), n));
}

}  // namespace hornet::consensus
