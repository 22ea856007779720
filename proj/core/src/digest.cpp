#include "gf2hash/digest.hpp"

#include <stdexcept>

#include "gf2hash/codec.hpp"

namespace gf2hash {

HashParams::HashParams(BitMatrix p, Model model) : p_(std::move(p)), model_(model) {
    if (p_.rows() != p_.cols()) throw std::invalid_argument("hash matrix must be square");
    if (is_invertible(p_)) {
        throw std::invalid_argument("hash matrix must be non-invertible");
    }
    if (model_ == Model::Two && p_.rows() % 4 != 0) {
        throw std::invalid_argument("model 2 requires block size divisible by 4");
    }
}

BitVector compress(const BitMatrix& p, const BitVector& h, const BitVector& b) {
    return mat_vec(p, h ^ b);
}

BitVector f_mix(const BitVector& h, const BitVector& h_prev) {
    const std::size_t m = h.size();
    if (h_prev.size() != m) throw std::invalid_argument("f_mix length mismatch");
    if (m % 4 != 0) throw std::invalid_argument("f_mix requires length divisible by 4");
    const std::size_t q = m / 4;
    BitVector out = h;
    for (std::size_t t = 0; t < q; ++t) {
        if (h_prev.get(q + t)) out.set(t, !out.get(t));
        if (h_prev.get(2 * q + t)) out.set(q + t, !out.get(q + t));
        if (h_prev.get(t)) out.set(2 * q + t, !out.get(2 * q + t));
        if (h_prev.get(3 * q + t)) out.set(3 * q + t, !out.get(3 * q + t));
    }
    return out;
}

Hasher::Hasher(const HashParams& params)
    : params_(params), h_cur_(params.block_bits()) {}

void Hasher::process_block(const BitVector& block) {
    const std::uint64_t i = blocks_done_ + 1;
    BitVector h_new = compress(params_.matrix(), h_cur_, block);
    if (params_.model() == Model::Two && i % 2 == 0) {
        h_new = f_mix(h_new, h_cur_);
    }
    h_cur_ = std::move(h_new);
    blocks_done_ = i;
}

void Hasher::update(std::span<const std::uint8_t> data) {
    if (finished_) throw std::logic_error("update after finish");
    const std::size_t m = params_.block_bits();
    if (m % 8 == 0) {
        const std::size_t bpb = m / 8;
        std::size_t off = 0;
        if (!tail_.empty()) {
            std::size_t need = bpb - tail_.size();
            std::size_t take = std::min(need, data.size());
            tail_.insert(tail_.end(), data.begin(), data.begin() + take);
            off = take;
            if (tail_.size() == bpb) {
                process_block(BitVector::from_bytes_msb(tail_, m));
                tail_.clear();
            }
        }
        while (data.size() - off >= bpb) {
            process_block(BitVector::from_bytes_msb(data.subspan(off, bpb), m));
            off += bpb;
        }
        tail_.insert(tail_.end(), data.begin() + off, data.end());
    } else {
        for (std::uint8_t byte : data) {
            for (int j = 7; j >= 0; --j) {
                tail_bits_.push_back((byte >> j) & 1);
            }
            while (tail_bits_.size() >= m) {
                BitVector b(m);
                for (std::size_t t = 0; t < m; ++t) {
                    if (tail_bits_[t]) b.set(t, true);
                }
                tail_bits_.erase(tail_bits_.begin(), tail_bits_.begin() + m);
                process_block(b);
            }
        }
    }
}

BitVector Hasher::finish() {
    if (finished_) throw std::logic_error("finish called twice");
    finished_ = true;

    const std::size_t m = params_.block_bits();
    std::size_t r;
    BitVector tail_vec(m);  // tail bits at positions 0..r-1
    if (m % 8 == 0) {
        r = 8 * tail_.size();
        for (std::size_t j = 0; j < r; ++j) {
            if ((tail_[j / 8] >> (7 - j % 8)) & 1) tail_vec.set(j, true);
        }
    } else {
        r = tail_bits_.size();
        for (std::size_t j = 0; j < r; ++j) {
            if (tail_bits_[j]) tail_vec.set(j, true);
        }
    }

    const std::uint64_t q = blocks_done_;
    if (q % 2 == 1) {
        process_block(tail_vec);  // r tail bits, zero-extended
    } else if (q == 0) {
        process_block(tail_vec);
        process_block(BitVector(m));
    } else if (r > 0) {
        // Fold correction: the padded stream differs from the processed one
        // only in block 1 (first r bits XOR tail) and in the dropped tail.
        // Propagate that delta through a message-free replay of the chain.
        BitVector d_cur(m);
        for (std::uint64_t i = 1; i <= q; ++i) {
            BitVector x = (i == 1) ? tail_vec : d_cur;
            BitVector d_new = mat_vec(params_.matrix(), x);
            if (params_.model() == Model::Two && i % 2 == 0) {
                d_new = f_mix(d_new, d_cur);
            }
            d_cur = std::move(d_new);
        }
        h_cur_ ^= d_cur;
    }
    return h_cur_;
}

BitVector hash(const HashParams& params, std::span<const std::uint8_t> message) {
    Hasher h(params);
    h.update(message);
    return h.finish();
}

BitVector hash_bits(const HashParams& params, const BitStream& bits) {
    const std::size_t m = params.block_bits();
    BlockStream bs = split_blocks(pad(bits, m), m);
    BitVector h(m);
    for (std::size_t i = 1; i <= bs.blocks.size(); ++i) {
        BitVector h_new = compress(params.matrix(), h, bs.blocks[i - 1]);
        if (params.model() == Model::Two && i % 2 == 0) {
            h_new = f_mix(h_new, h);
        }
        h = std::move(h_new);
    }
    return h;
}

std::string digest_to_hex(const BitVector& d) {
    static const char* kHex = "0123456789abcdef";
    std::vector<std::uint8_t> bytes = d.to_bytes_msb();
    std::string out;
    out.reserve(2 * bytes.size());
    for (std::uint8_t b : bytes) {
        out.push_back(kHex[b >> 4]);
        out.push_back(kHex[b & 0xf]);
    }
    return out;
}

std::string digest_to_bits(const BitVector& d) { return d.to_string(); }

}  // namespace gf2hash
