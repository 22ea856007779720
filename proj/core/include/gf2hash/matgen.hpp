#pragma once

#include <cstdint>
#include <vector>

#include "gf2hash/gf2.hpp"

namespace gf2hash {

// splitmix64: the fixed generator behind all seeded randomness in this
// project, chosen so that (seed -> matrix) is reproducible across
// implementations. The recurrence is spelled out in the README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound) by rejection, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// A permutation of {1, ..., m}; element j-1 is the image of j.
using Permutation = std::vector<std::uint32_t>;

bool is_valid_permutation(const Permutation& p);

// Seeded Fisher-Yates shuffle of [1..m]. Throws std::invalid_argument
// for m = 0.
Permutation fisher_yates(std::size_t m, std::uint64_t seed);

// In-place shuffle driven by an existing generator state.
void shuffle(Permutation& p, SplitMix64& rng);

// Matrix of the permutation: entry (p[j]-1, j) = 1.
BitMatrix perm_to_matrix(const Permutation& p);

// P = (P1 + P2) mod 2 for two independently shuffled permutations;
// P2 is reshuffled while it equals P1, so P is never the zero matrix.
// Singular by construction, with every row and column weight 0 or 2.
BitMatrix gen_noninvertible(std::size_t m, std::uint64_t seed);

}  // namespace gf2hash
