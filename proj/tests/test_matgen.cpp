#include <doctest.h>

#include <set>
#include <stdexcept>

#include "gf2hash/matgen.hpp"
#include "test_util.hpp"

using namespace gf2hash;

TEST_CASE("fisher_yates basics") {
    CHECK(fisher_yates(1, 123) == Permutation{1});
    CHECK(fisher_yates(8, 42) == fisher_yates(8, 42));
    CHECK_THROWS_AS(fisher_yates(0, 1), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(is_valid_permutation(fisher_yates(20, seed)));
    }
}

TEST_CASE("rejection sampling bound") {
    SplitMix64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.next_below(7) < 7);
    }
    CHECK_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("perm_to_matrix") {
    Permutation ident{1, 2, 3, 4};
    CHECK(perm_to_matrix(ident) == BitMatrix::identity(4));

    Permutation swap{2, 1};
    BitMatrix expect(2, 2);
    expect.set(0, 1, true);
    expect.set(1, 0, true);
    CHECK(perm_to_matrix(swap) == expect);

    CHECK_THROWS_AS(perm_to_matrix(Permutation{1, 1, 3}), std::invalid_argument);

    // All 6 matrices at m=3 are distinct permutation matrices.
    std::set<std::string> seen;
    for (const auto& p : testutil::all_permutations(3)) {
        BitMatrix a = perm_to_matrix(p);
        CHECK(is_permutation_matrix(a));
        std::string key;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) key += a.get(i, j) ? '1' : '0';
        }
        seen.insert(key);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("gen_noninvertible at m=2 is the all-ones matrix") {
    // Only one unordered pair of distinct 2x2 permutation matrices exists,
    // so every seed must produce the same rank-1 sum.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        BitMatrix p = gen_noninvertible(2, seed);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) CHECK(p.get(i, j));
        }
        CHECK(rank(p) == 1);
    }
}

TEST_CASE("gen_noninvertible invariants") {
    CHECK_THROWS_AS(gen_noninvertible(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_noninvertible(1, 1), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        BitMatrix p = gen_noninvertible(16, seed);
        CHECK_FALSE(is_invertible(p));
        for (std::size_t i = 0; i < 16; ++i) {
            std::size_t rw = p.row_weight(i);
            std::size_t cw = p.col_weight(i);
            CHECK((rw == 0 || rw == 2));
            CHECK((cw == 0 || cw == 2));
        }
    }
}

TEST_CASE("gen_noninvertible is deterministic bit-for-bit") {
    CHECK(gen_noninvertible(64, 777) == gen_noninvertible(64, 777));
    CHECK(gen_noninvertible(64, 777) != gen_noninvertible(64, 778));
}
