// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hornet::protocol {

// A 32-byte digest stored in internal (little-endian) byte order. String form uses
// the conventional reversed-hex display. Ordering compares the arithmetic value of
// the bytes read as a 256-bit little-endian unsigned integer.
class Hash256 {
public:
    static constexpr size_t kSize = 32;

    constexpr Hash256() = default;
    explicit constexpr Hash256(const std::array<uint8_t, kSize>& bytes) : bytes_(bytes) {}

    static Hash256 FromBytes(std::span<const uint8_t> bytes);  // requires bytes.size() == 32
    // Parses display (reversed) hex. Returns nullopt unless exactly 64 hex digits.
    static std::optional<Hash256> FromString(std::string_view display_hex);

    std::string ToString() const;

    bool IsNull() const;

    std::span<const uint8_t, kSize> Bytes() const { return bytes_; }
    std::span<uint8_t, kSize> MutableBytes() { return bytes_; }
    uint8_t operator[](size_t i) const { return bytes_[i]; }

    friend constexpr bool operator==(const Hash256&, const Hash256&) = default;
    friend constexpr std::strong_ordering operator<=>(const Hash256& a, const Hash256& b) {
        for (size_t i = kSize; i-- > 0;) {
            if (a.bytes_[i] != b.bytes_[i]) return a.bytes_[i] <=> b.bytes_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    std::array<uint8_t, kSize> bytes_{};
};

struct Hash256Hasher {
    size_t operator()(const Hash256& h) const noexcept {
        size_t out;
        std::memcpy(&out, h.Bytes().data(), sizeof(out));
        return out;
    }
};

}  // namespace hornet::protocol

template <>
struct std::hash<hornet::protocol::Hash256> : hornet::protocol::Hash256Hasher {};
