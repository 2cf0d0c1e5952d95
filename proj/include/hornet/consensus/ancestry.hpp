// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hornet/util/expected.hpp"

namespace hornet::consensus {

inline constexpr int kMedianTimeSpan = 11;

enum class MedianError { EmptyList };

// Median of up to 11 timestamps; for an even count, the lower-middle element.
util::Expected<int64_t, MedianError> MedianTimePast(std::span<const uint32_t> timestamps);

// The read-only slice of chain state that contextual rules may consult. Offsets count
// back from the parent: offset 0 is the parent itself.
class AncestorView {
public:
    virtual ~AncestorView() = default;

    // Number of ancestors reachable from the parent, including the parent.
    virtual int Depth() const = 0;
    // Requires 0 <= offset < Depth().
    virtual uint32_t TimestampAtOffset(int offset) const = 0;

    // Median of the most recent min(11, Depth()) timestamps including the parent.
    virtual int64_t MedianTimePast() const;
};

// An AncestorView over an explicit timestamp list ordered oldest to newest; the last
// entry is the parent.
class TimestampWindowView final : public AncestorView {
public:
    TimestampWindowView() = default;
    explicit TimestampWindowView(std::vector<uint32_t> timestamps) : timestamps_(std::move(timestamps)) {}

    int Depth() const override { return static_cast<int>(timestamps_.size()); }
    uint32_t TimestampAtOffset(int offset) const override { return timestamps_[timestamps_.size() - 1 - offset]; }

    const std::vector<uint32_t>& Timestamps() const { return timestamps_; }

private:
    std::vector<uint32_t> timestamps_;
};

}  // namespace hornet::consensus
