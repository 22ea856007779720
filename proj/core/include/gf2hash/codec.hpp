#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gf2hash/gf2.hpp"

namespace gf2hash {

// Unpacked bit sequence; one byte per bit, values 0/1. Used by the codec
// layer and the analysis tooling, where clarity beats packing.
struct BitStream {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    bool operator==(const BitStream&) const = default;
};

// Sequence of m-bit column-vector blocks; produced only from padded
// streams, so the block count is even and at least 2.
struct BlockStream {
    std::size_t m = 0;
    std::vector<BitVector> blocks;
};

// MSB-first expansion: bit 8i+j of the stream is bit (7-j) of byte i.
BitStream bytes_to_bits(std::span<const std::uint8_t> data);

// Inverse of bytes_to_bits; requires a byte-aligned stream.
std::vector<std::uint8_t> bits_to_bytes(const BitStream& s);

// Padding to an even number of m-bit blocks. With k = s.size(),
// q = k / m full blocks and r = k mod m:
//   q even, q >= 2:  the last r bits are XOR-folded into the first r bits
//                    and dropped (length k - r);
//   q odd:           m - r zero bits are appended (length k + m - r);
//   q == 0:          the stream is zero-extended to exactly 2m bits.
// The result length is always a positive even multiple of m.
BitStream pad(BitStream s, std::size_t m);

// Cuts a padded stream into blocks: bit i of block j (1-based) is stream
// bit i + m(j-1). Throws std::invalid_argument when the length is not a
// positive even multiple of m.
BlockStream split_blocks(const BitStream& s, std::size_t m);

}  // namespace gf2hash
