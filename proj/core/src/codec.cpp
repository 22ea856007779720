#include "gf2hash/codec.hpp"

#include <stdexcept>

namespace gf2hash {

BitStream bytes_to_bits(std::span<const std::uint8_t> data) {
    BitStream s;
    s.bits.reserve(8 * data.size());
    for (std::uint8_t byte : data) {
        for (int j = 7; j >= 0; --j) {
            s.bits.push_back((byte >> j) & 1);
        }
    }
    return s;
}

std::vector<std::uint8_t> bits_to_bytes(const BitStream& s) {
    if (s.size() % 8 != 0) throw std::invalid_argument("bit stream not byte-aligned");
    std::vector<std::uint8_t> out(s.size() / 8, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.bits[i]) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    }
    return out;
}

BitStream pad(BitStream s, std::size_t m) {
    if (m < 1) throw std::invalid_argument("block size must be at least 1");
    const std::size_t k = s.size();
    const std::size_t q = k / m;
    const std::size_t r = k % m;
    if (q % 2 == 1) {
        s.bits.resize(k + m - r, 0);
    } else if (q == 0) {
        s.bits.resize(2 * m, 0);
    } else {
        for (std::size_t t = 0; t < r; ++t) {
            s.bits[t] ^= s.bits[k - r + t];
        }
        s.bits.resize(k - r);
    }
    return s;
}

BlockStream split_blocks(const BitStream& s, std::size_t m) {
    if (m < 1) throw std::invalid_argument("block size must be at least 1");
    if (s.size() == 0 || s.size() % m != 0 || (s.size() / m) % 2 != 0) {
        throw std::invalid_argument("stream length is not a positive even multiple of m");
    }
    BlockStream out;
    out.m = m;
    out.blocks.reserve(s.size() / m);
    for (std::size_t j = 0; j < s.size() / m; ++j) {
        BitVector b(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (s.bits[i + m * j]) b.set(i, true);
        }
        out.blocks.push_back(std::move(b));
    }
    return out;
}

}  // namespace gf2hash
