#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gf2hash/digest.hpp"

namespace gf2hash {

// Two distinct equal-length messages with the same digest.
struct CollisionPair {
    std::vector<std::uint8_t> msg_a;
    std::vector<std::uint8_t> msg_b;
    BitVector digest;
};

// Builds a collision from the kernel of P: XORing a nullspace vector into
// the last full message block leaves every chaining value unchanged.
// base_msg must span at least one block and a whole number of blocks
// (8*|base_msg| a positive multiple of m), so that padding is the
// identity on the affected block. The returned pair is re-verified with
// an independent hash call before it is returned.
// Throws std::invalid_argument on unsuitable base lengths and
// std::runtime_error if every kernel vector fails verification.
CollisionPair construct_collision(const HashParams& params, std::span<const std::uint8_t> base_msg);

// Checks hash(x ^ y) == hash(x) ^ hash(y) on random equal-length pairs.
// True for this construction by design; a false return means a bug.
bool linearity_check(const HashParams& params, std::size_t trials, std::size_t len,
                     std::uint64_t seed);

struct AvalancheReport {
    std::size_t m = 0;
    std::size_t trials = 0;
    std::size_t message_len = 0;
    double mean_flip_fraction = 0.0;
    std::vector<double> per_bit_flip_rates;

    // Human-readable summary; states observed vs the 0.5 ideal without a
    // verdict.
    std::string to_text() const;
    // One "key=value" pair per line; per-bit rates as bit_<i>=<rate>.
    std::string to_kv() const;
};

// Single-bit-flip diffusion measurement: per trial, hash a random
// len-byte message, flip one uniformly random input bit, and record
// which digest bits changed.
AvalancheReport avalanche(const HashParams& params, std::size_t trials, std::size_t len,
                          std::uint64_t seed);

}  // namespace gf2hash
