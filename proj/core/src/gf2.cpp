#include "gf2hash/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace gf2hash {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void check_len(std::size_t len) {
    if (len < 1 || len > kMaxDim) {
        throw std::invalid_argument("bit length out of range");
    }
}

// Reversed-bit byte table so that MSB-first stream order maps onto the
// ascending in-word bit layout with one lookup per byte.
struct RevTable {
    std::uint8_t t[256];
    constexpr RevTable() : t{} {
        for (int b = 0; b < 256; ++b) {
            std::uint8_t r = 0;
            for (int j = 0; j < 8; ++j) {
                if (b & (1 << j)) r |= static_cast<std::uint8_t>(1 << (7 - j));
            }
            t[b] = r;
        }
    }
};
constexpr RevTable kRev;

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {
    check_len(len);
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') {
            throw std::invalid_argument("bit string must contain only 0/1");
        }
        v.set(i, bits[i] == '1');
    }
    return v;
}

BitVector BitVector::from_bytes_msb(std::span<const std::uint8_t> data, std::size_t len) {
    BitVector v(len);
    if (8 * data.size() < len) {
        throw std::invalid_argument("byte span shorter than requested bit length");
    }
    std::size_t full_bytes = len / 8;
    for (std::size_t i = 0; i < full_bytes; ++i) {
        v.words_[i / 8] |= static_cast<std::uint64_t>(kRev.t[data[i]]) << (8 * (i % 8));
    }
    for (std::size_t j = 8 * full_bytes; j < len; ++j) {
        v.set(j, (data[j / 8] >> (7 - j % 8)) & 1);
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("bit index");
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("bit index");
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const {
    for (std::uint64_t word : words_) {
        if (word != 0) return false;
    }
    return true;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector BitVector::operator^(const BitVector& other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::vector<std::uint8_t> BitVector::to_bytes_msb() const {
    if (len_ % 8 != 0) throw std::invalid_argument("bit length not byte-aligned");
    std::vector<std::uint8_t> out(len_ / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = kRev.t[(words_[i / 8] >> (8 * (i % 8))) & 0xff];
    }
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), words_(rows * wpr_, 0) {
    check_len(rows);
    check_len(cols);
}

BitMatrix BitMatrix::identity(std::size_t m) {
    BitMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) a.set(i, i, true);
    return a;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    BitMatrix a(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != a.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (rows[i][j] != '0' && rows[i][j] != '1') {
                throw std::invalid_argument("bit string must contain only 0/1");
            }
            a.set(i, j, rows[i][j] == '1');
        }
    }
    return a;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return (words_[i * wpr_ + j / 64] >> (j % 64)) & 1;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (v) {
        words_[i * wpr_ + j / 64] |= mask;
    } else {
        words_[i * wpr_ + j / 64] &= ~mask;
    }
}

std::span<const std::uint64_t> BitMatrix::row_words(std::size_t i) const {
    return {words_.data() + i * wpr_, wpr_};
}

std::span<std::uint64_t> BitMatrix::row_words(std::size_t i) {
    return {words_.data() + i * wpr_, wpr_};
}

std::size_t BitMatrix::row_weight(std::size_t i) const {
    std::size_t w = 0;
    for (std::uint64_t word : row_words(i)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

std::size_t BitMatrix::col_weight(std::size_t j) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < rows_; ++i) w += get(i, j) ? 1 : 0;
    return w;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec dimension mismatch");
    BitVector out(m.rows());
    auto vw = v.words();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto rw = m.row_words(i);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < rw.size(); ++k) acc ^= rw[k] & vw[k];
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("mat_add dimension mismatch");
    }
    BitMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ra = a.row_words(i);
        auto rb = b.row_words(i);
        auto ro = out.row_words(i);
        for (std::size_t k = 0; k < ra.size(); ++k) ro[k] = ra[k] ^ rb[k];
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    // Row-by-row: out.row(i) = XOR of rows of b selected by bits of a.row(i).
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ro = out.row_words(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            auto rb = b.row_words(j);
            for (std::size_t k = 0; k < rb.size(); ++k) ro[k] ^= rb[k];
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix& a) {
    BitMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.get(i, j)) out.set(j, i, true);
        }
    }
    return out;
}

namespace {

// Reduced row echelon form in place over packed rows. Returns pivot columns
// in ascending order; ties broken by lowest row index.
std::vector<std::size_t> rref(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t word = c / 64;
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][word] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && (rows[i][word] & mask)) {
                for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[r][k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> copy_rows(const BitMatrix& a) {
    std::vector<std::vector<std::uint64_t>> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto rw = a.row_words(i);
        rows[i].assign(rw.begin(), rw.end());
    }
    return rows;
}

}  // namespace

std::size_t rank(const BitMatrix& a) {
    auto rows = copy_rows(a);
    return rref(rows, a.cols()).size();
}

bool is_invertible(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("is_invertible requires a square matrix");
    return rank(a) == a.rows();
}

std::vector<BitVector> nullspace_basis(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("nullspace_basis requires a square matrix");
    auto rows = copy_rows(a);
    std::vector<std::size_t> pivots = rref(rows, a.cols());

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(a.cols());
        v.set(f, true);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if ((rows[r][f / 64] >> (f % 64)) & 1) v.set(pivots[r], true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_permutation_matrix(const BitMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.row_weight(i) != 1) return false;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.col_weight(j) != 1) return false;
    }
    return true;
}

}  // namespace gf2hash
