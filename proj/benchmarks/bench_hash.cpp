#include <benchmark/benchmark.h>
#include <openssl/evp.h>

#include <vector>

#include "gf2hash/digest.hpp"
#include "gf2hash/matgen.hpp"

namespace {

std::vector<std::uint8_t> make_buffer(std::size_t size) {
    gf2hash::SplitMix64 rng(1);
    std::vector<std::uint8_t> buf(size);
    for (auto& b : buf) b = static_cast<std::uint8_t>(rng.next() & 0xff);
    return buf;
}

void BM_ModelHash(benchmark::State& state, gf2hash::Model model) {
    gf2hash::HashParams params(gf2hash::gen_noninvertible(128, 1), model);
    auto buf = make_buffer(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2hash::hash(params, buf));
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}

void BM_Sha256(benchmark::State& state) {
    auto buf = make_buffer(static_cast<std::size_t>(state.range(0)));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    for (auto _ : state) {
        EVP_Digest(buf.data(), buf.size(), md, &md_len, EVP_sha256(), nullptr);
        benchmark::DoNotOptimize(md);
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}

void BM_GenMatrix(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gf2hash::gen_noninvertible(static_cast<std::size_t>(state.range(0)), seed++));
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_ModelHash, model1, gf2hash::Model::One)->Range(64, 1 << 20);
BENCHMARK_CAPTURE(BM_ModelHash, model2, gf2hash::Model::Two)->Range(64, 1 << 20);
BENCHMARK(BM_Sha256)->Range(64, 1 << 20);
BENCHMARK(BM_GenMatrix)->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
