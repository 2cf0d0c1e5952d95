// Copyright (c) 2025 The hornet-spec developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "hornet/script/writer.hpp"

#include "hornet/script/script_num.hpp"

namespace hornet::script {

Writer& Writer::PushInt(int64_t value) {
    if (value == 0) return Then(Op::Push0);
    if (value == -1) return Then(Op::PushNeg1);
    if (value >= 1 && value <= 16) return Then(PushSmallInt(static_cast<int>(value)));
    const auto encoded = EncodeScriptNum(value);
    return PushData(encoded);
}

Writer& Writer::PushData(std::span<const uint8_t> data) {
    const size_t n = data.size();
    if (n == 0) {
        return Then(Op::Push0);
    } else if (n == 1 && data[0] >= 1 && data[0] <= 16) {
        return Then(PushSmallInt(data[0]));
    } else if (n == 1 && data[0] == 0x81) {
        return Then(Op::PushNeg1);
    } else if (n <= 75) {
        script_.push_back(static_cast<uint8_t>(n));
    } else if (n <= 0xff) {
        script_.push_back(static_cast<uint8_t>(Op::PushData1));
        script_.push_back(static_cast<uint8_t>(n));
    } else if (n <= 0xffff) {
        script_.push_back(static_cast<uint8_t>(Op::PushData2));
        script_.push_back(static_cast<uint8_t>(n));
        script_.push_back(static_cast<uint8_t>(n >> 8));
    } else {
        script_.push_back(static_cast<uint8_t>(Op::PushData4));
        for (int i = 0; i < 4; ++i) script_.push_back(static_cast<uint8_t>(n >> (8 * i)));
    }
    script_.insert(script_.end(), data.begin(), data.end());
    return *this;
}

Writer& Writer::Then(Op op) {
    script_.push_back(static_cast<uint8_t>(op));
    return *this;
}

}  // namespace hornet::script
