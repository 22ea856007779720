#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2hash {

// Largest supported matrix/vector dimension.
inline constexpr std::size_t kMaxDim = std::size_t{1} << 16;

// Dense bit vector over GF(2). Logical bit j lives in bit (j % 64) of
// word (j / 64); padding bits past len-1 are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    // Parses a string like "10100101"; bit 0 is the first character.
    static BitVector from_string(std::string_view bits);

    // Packs bytes MSB-first: logical bit 8i+j is bit (7-j) of byte i.
    // len may be smaller than 8*data.size(); excess bits are ignored.
    static BitVector from_bytes_msb(std::span<const std::uint8_t> data, std::size_t len);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);

    std::size_t weight() const;
    bool is_zero() const;

    BitVector& operator^=(const BitVector& other);
    BitVector operator^(const BitVector& other) const;
    bool operator==(const BitVector& other) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::string to_string() const;

    // Inverse of from_bytes_msb; requires size() % 8 == 0.
    std::vector<std::uint8_t> to_bytes_msb() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense bit matrix over GF(2), rows bit-packed with the same word layout
// as BitVector.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t m);
    static BitMatrix from_strings(std::span<const std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool v);

    std::span<const std::uint64_t> row_words(std::size_t i) const;
    std::span<std::uint64_t> row_words(std::size_t i);
    std::size_t words_per_row() const { return wpr_; }

    std::size_t row_weight(std::size_t i) const;
    std::size_t col_weight(std::size_t j) const;

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

// Matrix-vector product mod 2. Each output bit is the parity of
// popcount(row & v). Throws std::invalid_argument on dimension mismatch.
BitVector mat_vec(const BitMatrix& m, const BitVector& v);

// Entrywise XOR. Throws std::invalid_argument on dimension mismatch.
BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b);

// Matrix product mod 2. Throws std::invalid_argument on dimension mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

BitMatrix transpose(const BitMatrix& a);

// Row rank over GF(2) by Gaussian elimination on packed rows.
std::size_t rank(const BitMatrix& a);

// True iff the square matrix has full rank.
bool is_invertible(const BitMatrix& a);

// Basis of {v : A v = 0}; deterministic (RREF with lowest-index pivot rows,
// free columns in ascending order). Empty iff A is invertible.
std::vector<BitVector> nullspace_basis(const BitMatrix& a);

// True iff every row and every column has weight exactly 1.
bool is_permutation_matrix(const BitMatrix& a);

}  // namespace gf2hash
