#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gf2hash/gf2.hpp"

namespace gf2hash {

enum class Model : int { One = 1, Two = 2 };

// The key of the construction: a singular m x m matrix plus the model
// selector. Construction rejects invertible matrices outright, and
// Model Two additionally requires m divisible by 4 (the mixing function
// splits the state into quarters).
class HashParams {
public:
    HashParams(BitMatrix p, Model model);

    const BitMatrix& matrix() const { return p_; }
    std::size_t block_bits() const { return p_.rows(); }
    Model model() const { return model_; }

private:
    BitMatrix p_;
    Model model_;
};

// One chaining step: P * (h XOR b) mod 2.
BitVector compress(const BitMatrix& p, const BitVector& h, const BitVector& b);

// Quarter-wise mixing of the current chaining value with the previous
// one. With Q1..Q4 the four m/4-bit quarters:
//   Q1(out) = Q1(h) ^ Q2(h_prev)
//   Q2(out) = Q2(h) ^ Q3(h_prev)
//   Q3(out) = Q3(h) ^ Q1(h_prev)
//   Q4(out) = Q4(h) ^ Q4(h_prev)
BitVector f_mix(const BitVector& h, const BitVector& h_prev);

// Incremental hasher. Single-owner; feed bytes with update(), then call
// finish() once. State is O(m): the chain value, the previous chain
// value, and at most one block of unconsumed tail bits.
//
// The padding fold targets the first bits of the stream, which were
// consumed long before the tail is known. Because every step is linear
// over GF(2), the fold is applied after the fact as a correction: a
// delta confined to block 1 is propagated through a second, message-free
// run of the recurrence and XORed onto the final chain value.
class Hasher {
public:
    explicit Hasher(const HashParams& params);

    void update(std::span<const std::uint8_t> data);
    BitVector finish();

private:
    void process_block(const BitVector& block);
    void flush_full_blocks();

    const HashParams& params_;
    BitVector h_cur_;
    std::uint64_t blocks_done_ = 0;
    std::vector<std::uint8_t> tail_;  // raw bytes when m % 8 == 0
    std::vector<std::uint8_t> tail_bits_;  // unpacked bits otherwise
    bool finished_ = false;
};

// One-shot hash of a complete message.
BitVector hash(const HashParams& params, std::span<const std::uint8_t> message);

struct BitStream;  // codec.hpp

// Hash of a raw bit stream via the codec path (pad, split, chain).
// Agrees with hash() on byte messages; mainly useful for block sizes
// that are not byte-aligned.
BitVector hash_bits(const HashParams& params, const BitStream& bits);

// Lowercase hex, bits packed MSB-first; requires m % 8 == 0.
std::string digest_to_hex(const BitVector& d);

// "01..." rendering for block sizes that are not byte-aligned.
std::string digest_to_bits(const BitVector& d);

}  // namespace gf2hash
