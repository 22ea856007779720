#include <doctest.h>

#include <stdexcept>
#include <string_view>

#include "gf2hash/codec.hpp"
#include "gf2hash/digest.hpp"
#include "gf2hash/matgen.hpp"
#include "test_util.hpp"

using namespace gf2hash;

namespace {

HashParams params_for(std::size_t m, std::uint64_t seed, Model model) {
    return HashParams(gen_noninvertible(m, seed), model);
}

BitStream stream_of(std::string_view s) {
    BitStream out;
    for (char c : s) out.bits.push_back(c == '1' ? 1 : 0);
    return out;
}

const std::array<std::string_view, 2> kAllOnes2x2 = {"11", "11"};

}  // namespace

TEST_CASE("HashParams rejects bad parameters") {
    CHECK_THROWS_AS(HashParams(BitMatrix::identity(8), Model::One), std::invalid_argument);
    // Singular but m % 4 != 0: fine for model 1, rejected for model 2.
    BitMatrix p = gen_noninvertible(6, 1);
    CHECK_NOTHROW(HashParams(p, Model::One));
    CHECK_THROWS_AS(HashParams(p, Model::Two), std::invalid_argument);
}

TEST_CASE("compress") {
    SplitMix64 rng(1);
    BitVector h = testutil::random_vector(8, rng);
    BitVector b = testutil::random_vector(8, rng);
    CHECK(compress(BitMatrix::identity(8), h, b) == (h ^ b));
    CHECK(compress(gen_noninvertible(8, 2), BitVector(8), BitVector(8)).is_zero());

    // Against the naive nested-loop oracle.
    for (int trial = 0; trial < 30; ++trial) {
        BitMatrix p = gen_noninvertible(8, rng.next());
        BitVector hh = testutil::random_vector(8, rng);
        BitVector bb = testutil::random_vector(8, rng);
        refimpl::Bits sum(8);
        auto rh = testutil::to_ref(hh);
        auto rb = testutil::to_ref(bb);
        for (int j = 0; j < 8; ++j) sum[j] = (rh[j] + rb[j]) % 2;
        CHECK(compress(p, hh, bb) ==
              testutil::from_ref(refimpl::ref_mat_vec(testutil::to_ref(p), sum)));
    }
}

TEST_CASE("f_mix") {
    SplitMix64 rng(2);
    BitVector h = testutil::random_vector(8, rng);
    CHECK(f_mix(h, BitVector(8)) == h);

    // f_mix(0, h') permutes the quarters of h': (Q2, Q3, Q1, Q4).
    BitVector hp = BitVector::from_string("10110100");
    CHECK(f_mix(BitVector(8), hp) == BitVector::from_string("11011000"));

    // XOR with a fixed mask of h', so applying it twice restores h.
    BitVector h2 = testutil::random_vector(8, rng);
    CHECK(f_mix(f_mix(h2, hp), hp) == h2);

    CHECK_THROWS_AS(f_mix(BitVector(6), BitVector(6)), std::invalid_argument);
    CHECK_THROWS_AS(f_mix(BitVector(8), BitVector(4)), std::invalid_argument);
}

TEST_CASE("f_mix agrees with the reference mixer") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t m = 4 * (1 + rng.next_below(16));
        BitVector h = testutil::random_vector(m, rng);
        BitVector hp = testutil::random_vector(m, rng);
        refimpl::Bits expect = refimpl::ref_f(testutil::to_ref(h), testutil::to_ref(hp));
        CHECK(f_mix(h, hp) == testutil::from_ref(expect));
    }
}

TEST_CASE("empty message hashes to the zero digest") {
    for (Model model : {Model::One, Model::Two}) {
        HashParams params = params_for(128, 5, model);
        CHECK(hash(params, {}).is_zero());
    }
}

TEST_CASE("hand-worked m=2 model-1 chain") {
    // P = [[1,1],[1,1]], blocks 10 and 01:
    // H1 = P*(10) = (1,1); H2 = P*(01 ^ 11) = P*(10) = (1,1).
    HashParams params(BitMatrix::from_strings(kAllOnes2x2), Model::One);
    BitVector d = hash_bits(params, stream_of("1001"));
    CHECK(d.to_string() == "11");
}

TEST_CASE("recurrence equals the closed form with explicit matrix powers") {
    SplitMix64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = 8;
        BitMatrix p = gen_noninvertible(m, rng.next());
        HashParams params(p, Model::One);
        std::size_t n_blocks = 2 * (1 + rng.next_below(3));  // 2, 4 or 6

        BitStream s;
        for (std::size_t i = 0; i < n_blocks * m; ++i) s.bits.push_back(rng.next() & 1);
        BlockStream bs = split_blocks(s, m);

        // H_N = P*B_N ^ P^2*B_{N-1} ^ ... ^ P^N*B_1
        BitVector expect(m);
        BitMatrix power = p;
        for (std::size_t i = 0; i < n_blocks; ++i) {
            expect ^= mat_vec(power, bs.blocks[n_blocks - 1 - i]);
            power = mat_mul(power, p);
        }
        CHECK(hash_bits(params, s) == expect);
    }
}

TEST_CASE("word-packed hash equals the nested-loop reference") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = 8 * (1 + rng.next_below(4));  // byte-aligned here; odd m in acceptance
        Model model = (rng.next() & 1) ? Model::One : Model::Two;
        HashParams params = params_for(m, rng.next(), model);
        auto msg = testutil::random_bytes(rng.next_below(10 * m), rng);
        refimpl::Bits expect =
            refimpl::ref_hash(testutil::to_ref(params.matrix()), static_cast<int>(model), msg);
        CHECK(hash(params, msg) == testutil::from_ref(expect));
    }
}

TEST_CASE("streaming hasher matches one-shot hashing") {
    SplitMix64 rng(8);
    for (std::size_t m : {8u, 12u, 128u}) {
        for (Model model : {Model::One, Model::Two}) {
            HashParams params = params_for(m, 9, model);
            // Lengths chosen to hit every padding branch: empty, short of a
            // block, odd block count, even count with and without a tail.
            for (std::size_t len : {0u, 1u, 3u, 16u, 33u, 100u, 257u, 1000u}) {
                auto msg = testutil::random_bytes(len, rng);
                BitVector one_shot = hash(params, msg);

                Hasher hasher(params);
                std::size_t off = 0;
                std::size_t chunk = 1;
                while (off < msg.size()) {
                    std::size_t take = std::min(chunk, msg.size() - off);
                    hasher.update(std::span(msg).subspan(off, take));
                    off += take;
                    chunk = chunk * 2 + 1;
                }
                CHECK(hasher.finish() == one_shot);
            }
        }
    }
}

TEST_CASE("hash over bytes equals hash_bits over the expanded stream") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 4 * (1 + rng.next_below(8));
        HashParams params = params_for(m, rng.next(), Model::Two);
        auto msg = testutil::random_bytes(rng.next_below(200), rng);
        CHECK(hash(params, msg) == hash_bits(params, bytes_to_bits(msg)));
    }
}

TEST_CASE("fixed digest length regardless of input size") {
    HashParams params = params_for(128, 10, Model::Two);
    SplitMix64 rng(10);
    for (std::size_t len : {0u, 1u, 15u, 16u, 17u, 4096u}) {
        CHECK(hash(params, testutil::random_bytes(len, rng)).size() == 128);
    }
}

TEST_CASE("models 1 and 2 differ on generic input") {
    SplitMix64 rng(11);
    BitMatrix p = gen_noninvertible(128, 12);
    HashParams m1(p, Model::One);
    HashParams m2(p, Model::Two);
    int differing = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto msg = testutil::random_bytes(64, rng);
        if (hash(m1, msg) != hash(m2, msg)) ++differing;
    }
    CHECK(differing >= 49);
}

TEST_CASE("digest_to_hex") {
    CHECK(digest_to_hex(BitVector(8)) == "00");
    CHECK(digest_to_hex(BitVector::from_string("10100101")) == "a5");
    CHECK(digest_to_hex(BitVector(128)).size() == 32);
    CHECK(digest_to_bits(BitVector::from_string("0110")) == "0110");
    CHECK_THROWS_AS(digest_to_hex(BitVector(6)), std::invalid_argument);
}

TEST_CASE("hasher rejects reuse") {
    HashParams params = params_for(8, 13, Model::One);
    Hasher h(params);
    h.update(std::array<std::uint8_t, 2>{1, 2});
    h.finish();
    CHECK_THROWS_AS(h.finish(), std::logic_error);
    CHECK_THROWS_AS(h.update(std::array<std::uint8_t, 1>{3}), std::logic_error);
}
