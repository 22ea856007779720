#include "gf2hash/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gf2hash/matgen.hpp"

namespace gf2hash {

namespace {

std::vector<std::uint8_t> random_bytes(SplitMix64& rng, std::size_t len) {
    std::vector<std::uint8_t> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint8_t>(rng.next() & 0xff);
    }
    return out;
}

}  // namespace

CollisionPair construct_collision(const HashParams& params,
                                  std::span<const std::uint8_t> base_msg) {
    const std::size_t m = params.block_bits();
    const std::size_t k = 8 * base_msg.size();
    if (k < m) throw std::invalid_argument("base message shorter than one block");
    if (k % m != 0) {
        throw std::invalid_argument("base message bit length must be a multiple of the block size");
    }

    const std::size_t last_block = k / m - 1;  // 0-based index of the last full block
    std::vector<std::uint8_t> msg_a(base_msg.begin(), base_msg.end());
    const BitVector digest_a = hash(params, msg_a);

    std::vector<BitVector> kernel = nullspace_basis(params.matrix());
    for (const BitVector& v : kernel) {
        if (v.is_zero()) continue;
        std::vector<std::uint8_t> msg_b = msg_a;
        for (std::size_t t = 0; t < m; ++t) {
            if (!v.get(t)) continue;
            std::size_t bit = last_block * m + t;
            msg_b[bit / 8] ^= static_cast<std::uint8_t>(1u << (7 - bit % 8));
        }
        if (msg_b == msg_a) continue;
        if (hash(params, msg_b) == digest_a) {
            return CollisionPair{std::move(msg_a), std::move(msg_b), digest_a};
        }
    }
    throw std::runtime_error("no kernel vector produced a verifiable collision");
}

bool linearity_check(const HashParams& params, std::size_t trials, std::size_t len,
                     std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::uint8_t> x = random_bytes(rng, len);
        std::vector<std::uint8_t> y = random_bytes(rng, len);
        std::vector<std::uint8_t> z(len);
        for (std::size_t i = 0; i < len; ++i) z[i] = x[i] ^ y[i];
        if (hash(params, z) != (hash(params, x) ^ hash(params, y))) return false;
    }
    return true;
}

AvalancheReport avalanche(const HashParams& params, std::size_t trials, std::size_t len,
                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (len < 1) throw std::invalid_argument("message length must be at least 1");
    const std::size_t m = params.block_bits();

    SplitMix64 rng(seed);
    std::vector<std::size_t> flips(m, 0);
    double total_fraction = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::uint8_t> msg = random_bytes(rng, len);
        BitVector before = hash(params, msg);
        std::size_t bit = rng.next_below(8 * len);
        msg[bit / 8] ^= static_cast<std::uint8_t>(1u << (7 - bit % 8));
        BitVector after = hash(params, msg);
        BitVector diff = before ^ after;
        for (std::size_t i = 0; i < m; ++i) {
            if (diff.get(i)) ++flips[i];
        }
        total_fraction += static_cast<double>(diff.weight()) / static_cast<double>(m);
    }

    AvalancheReport rep;
    rep.m = m;
    rep.trials = trials;
    rep.message_len = len;
    rep.mean_flip_fraction = total_fraction / static_cast<double>(trials);
    rep.per_bit_flip_rates.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        rep.per_bit_flip_rates[i] = static_cast<double>(flips[i]) / static_cast<double>(trials);
    }
    return rep;
}

std::string AvalancheReport::to_text() const {
    std::ostringstream os;
    os << "avalanche report\n"
       << "  block size:         " << m << " bits\n"
       << "  trials:             " << trials << "\n"
       << "  message length:     " << message_len << " bytes\n"
       << "  mean flip fraction: " << mean_flip_fraction << " (ideal 0.5)\n";
    double lo = 1.0, hi = 0.0;
    for (double r : per_bit_flip_rates) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    os << "  per-bit rate range: [" << lo << ", " << hi << "]\n";
    return os.str();
}

std::string AvalancheReport::to_kv() const {
    std::ostringstream os;
    os << "m=" << m << "\n"
       << "trials=" << trials << "\n"
       << "message_len=" << message_len << "\n"
       << "mean_flip_fraction=" << mean_flip_fraction << "\n"
       << "ideal=0.5\n";
    for (std::size_t i = 0; i < per_bit_flip_rates.size(); ++i) {
        os << "bit_" << i << "=" << per_bit_flip_rates[i] << "\n";
    }
    return os.str();
}

}  // namespace gf2hash
