#!/usr/bin/env python3
# Copyright (c) 2025 The hornet-spec developers
# Distributed under the MIT software license, see the accompanying
# file COPYING or http://www.opensource.org/licenses/mit-license.php.
"""Independent reference values frozen into the C++ unit tests.

Everything here uses only hashlib and Python integers.
"""
import hashlib
import struct


def sha256(b):
    return hashlib.sha256(b).digest()


def sha256d(b):
    return sha256(sha256(b))


def display(h):
    return h[::-1].hex()


def compact_size(n):
    if n < 0xfd:
        return bytes([n])
    if n <= 0xffff:
        return b"\xfd" + struct.pack("<H", n)
    if n <= 0xffffffff:
        return b"\xfe" + struct.pack("<I", n)
    return b"\xff" + struct.pack("<Q", n)


def set_compact(bits):
    size = bits >> 24
    word = bits & 0x007fffff
    if size <= 3:
        value = word >> (8 * (3 - size))
    else:
        value = word << (8 * (size - 3))
    negative = word != 0 and (bits & 0x00800000) != 0
    overflow = word != 0 and (size > 34 or (word > 0xff and size > 33) or (word > 0xffff and size > 32))
    return value, negative, overflow


def get_compact(value):
    size = (value.bit_length() + 7) // 8
    if size <= 3:
        compact = (value & 0xffffffffffffffff) << (8 * (3 - size))
    else:
        compact = value >> (8 * (size - 3))
    if compact & 0x00800000:
        compact >>= 8
        size += 1
    return compact | (size << 24)


POW_LIMIT_MAINNET = (1 << 224) - 1
TIMESPAN = 14 * 24 * 60 * 60


def retarget(parent_bits, first_time, last_time, pow_limit):
    actual = last_time - first_time
    actual = max(TIMESPAN // 4, min(TIMESPAN * 4, actual))
    target, _, _ = set_compact(parent_bits)
    target = target * actual // TIMESPAN
    target = min(target, pow_limit)
    return get_compact(target)


def header(version, prev, merkle, time, bits, nonce):
    return struct.pack("<i", version) + prev + merkle + struct.pack("<III", time, bits, nonce)


def script_num(v):
    if v == 0:
        return b""
    neg = v < 0
    a = abs(v)
    out = bytearray()
    while a:
        out.append(a & 0xff)
        a >>= 8
    if out[-1] & 0x80:
        out.append(0x80 if neg else 0)
    elif neg:
        out[-1] |= 0x80
    return bytes(out)


def tx_serialize(version, inputs, outputs, locktime, witness):
    body = struct.pack("<i", version)
    has_witness = witness and any(inp[3] for inp in inputs)
    if has_witness:
        body += b"\x00\x01"
    body += compact_size(len(inputs))
    for txid, index, script_sig, _, sequence in inputs:
        body += txid + struct.pack("<I", index) + compact_size(len(script_sig)) + script_sig + struct.pack("<I", sequence)
    body += compact_size(len(outputs))
    for value, spk in outputs:
        body += struct.pack("<q", value) + compact_size(len(spk)) + spk
    if has_witness:
        for inp in inputs:
            stack = inp[3]
            body += compact_size(len(stack))
            for item in stack:
                body += compact_size(len(item)) + item
    body += struct.pack("<I", locktime)
    return body


def merkle(leaves):
    level = list(leaves)
    while len(level) > 1:
        if len(level) % 2:
            level.append(level[-1])
        level = [sha256d(level[i] + level[i + 1]) for i in range(0, len(level), 2)]
    return level[0]


def main():
    print("sha256('')", sha256(b"").hex())
    print("sha256('abc')", sha256(b"abc").hex())
    print("sha256d('abc')", sha256d(b"abc").hex())

    genesis = header(1, b"\x00" * 32,
                     bytes.fromhex("4a5e1e4baab89f3a32518a88c31bc87f618f76673e2cc77ab2127b7afdeda33b")[::-1],
                     1231006505, 0x1d00ffff, 2083236893)
    print("genesis header", genesis.hex())
    print("genesis hash", display(sha256d(genesis)))

    for bits in [0x1d00ffff, 0x1b0404cb, 0x207fffff, 0x1d00d86a, 0x01003456, 0x01123456, 0x02123456,
                 0x03123456, 0x04123456, 0x04923456, 0x05009234, 0x20123456, 0xff123456, 0x00000000, 0x21010000,
                 0x22000100]:
        value, neg, over = set_compact(bits)
        print("expand %08x value=%064x negative=%d overflow=%d" % (bits, value & ((1 << 256) - 1), neg, over))

    for value in [0, 0x12, 0x80, 0x1234, 0x123456, 0x800000, 0x12345600, (1 << 224) - 1, (1 << 255) - 1,
                  0xffff << 208]:
        print("compress %064x -> %08x" % (value, get_compact(value)))

    cases = [
        (0x1d00ffff, 0, TIMESPAN),
        (0x1d00ffff, 0, TIMESPAN // 2),
        (0x1d00ffff, 0, TIMESPAN * 10),
        (0x1d00ffff, 0, 1),
        (0x1c05a3f4, 1000, 1000 + 1209600 - 86400),
        (0x1b0404cb, 5000, 5000 + 2 * 1209600 + 17),
        (0x207fffff, 0, TIMESPAN * 3),
    ]
    for parent_bits, first, last in cases:
        print("retarget mainnet %08x %d %d -> %08x" % (parent_bits, first, last,
                                                        retarget(parent_bits, first, last, POW_LIMIT_MAINNET)))
    print("retarget regtest 207fffff 0 %d -> %08x" % (TIMESPAN // 2, retarget(0x207fffff, 0, TIMESPAN // 2, (1 << 255) - 1)))

    for v in [0, 1, -1, 16, 21, 42, 127, 128, -128, 255, 256, -255, 32767, 32768, 2147483647, -2147483648,
              4294967294]:
        print("scriptnum %d %s" % (v, script_num(v).hex()))

    prev1 = sha256d(b"prev-1")
    prev2 = sha256d(b"prev-2")
    inputs = [
        (prev1, 0, bytes.fromhex("51"), [], 0xfffffffe),
        (prev2, 3, b"", [bytes.fromhex("30440220"), b"\x02" * 33], 0xffffffff),
    ]
    outputs = [(50000, bytes.fromhex("0014") + b"\x11" * 20), (1234567, bytes.fromhex("51"))]
    legacy = tx_serialize(2, inputs, outputs, 101, False)
    full = tx_serialize(2, inputs, outputs, 101, True)
    print("tx legacy", legacy.hex())
    print("tx full", full.hex())
    print("tx txid", display(sha256d(legacy)))
    print("tx wtxid", display(sha256d(full)))
    print("tx sizes base=%d total=%d weight=%d" % (len(legacy), len(full), 3 * len(legacy) + len(full)))

    for n in range(1, 8):
        leaves = [sha256d(bytes([i])) for i in range(n)]
        print("merkle %d %s" % (n, display(merkle(leaves))))


if __name__ == "__main__":
    main()
