#include "gf2hash/matgen.hpp"

#include <numeric>
#include <stdexcept>

namespace gf2hash {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Reject draws from the incomplete final cycle of size 2^64 mod bound.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

bool is_valid_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::uint32_t v : p) {
        if (v < 1 || v > p.size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return !p.empty();
}

void shuffle(Permutation& p, SplitMix64& rng) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        std::size_t j = i + rng.next_below(p.size() - i);
        std::swap(p[i], p[j]);
    }
}

Permutation fisher_yates(std::size_t m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("permutation size must be at least 1");
    if (m > kMaxDim) throw std::invalid_argument("permutation size too large");
    Permutation p(m);
    std::iota(p.begin(), p.end(), 1u);
    SplitMix64 rng(seed);
    shuffle(p, rng);
    return p;
}

BitMatrix perm_to_matrix(const Permutation& p) {
    if (!is_valid_permutation(p)) throw std::invalid_argument("not a permutation of 1..m");
    BitMatrix a(p.size(), p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        a.set(p[j] - 1, j, true);
    }
    return a;
}

BitMatrix gen_noninvertible(std::size_t m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("matrix size must be at least 2");
    if (m > kMaxDim) throw std::invalid_argument("matrix size too large");
    SplitMix64 rng(seed);
    Permutation a(m), b(m);
    std::iota(a.begin(), a.end(), 1u);
    std::iota(b.begin(), b.end(), 1u);
    shuffle(a, rng);
    do {
        shuffle(b, rng);
    } while (b == a);
    return mat_add(perm_to_matrix(a), perm_to_matrix(b));
}

}  // namespace gf2hash
