#include "gf2hash/matrix_file.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

namespace gf2hash {

namespace {

constexpr char kMagic[4] = {'G', 'F', '2', 'M'};
constexpr std::uint8_t kVersion = 1;

std::uint32_t crc_of(std::span<const std::uint8_t> data) {
    return static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(v & 0xff);
    out.push_back((v >> 8) & 0xff);
    out.push_back((v >> 16) & 0xff);
    out.push_back((v >> 24) & 0xff);
}

std::uint32_t get_u32le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

std::vector<std::uint8_t> encode_matrix_file(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw MatrixFileError(MatrixFileError::Kind::Format, "matrix must be square");
    const std::size_t dim = m.rows();
    const std::size_t row_bytes = (dim + 7) / 8;

    std::vector<std::uint8_t> out;
    out.reserve(9 + dim * row_bytes + 4);
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    put_u32le(out, static_cast<std::uint32_t>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t base = out.size();
        out.resize(base + row_bytes, 0);
        for (std::size_t j = 0; j < dim; ++j) {
            if (m.get(i, j)) out[base + j / 8] |= static_cast<std::uint8_t>(1u << (7 - j % 8));
        }
    }
    put_u32le(out, crc_of(out));
    return out;
}

BitMatrix decode_matrix_file(std::span<const std::uint8_t> data) {
    if (data.size() < 13) throw MatrixFileError(MatrixFileError::Kind::Format, "truncated file");
    if (std::memcmp(data.data(), kMagic, 4) != 0) throw MatrixFileError(MatrixFileError::Kind::Format, "bad magic");
    if (data[4] != kVersion) throw MatrixFileError(MatrixFileError::Kind::Format, "unsupported version");
    const std::uint32_t dim = get_u32le(data.data() + 5);
    if (dim < 2 || dim > kMaxDim) throw MatrixFileError(MatrixFileError::Kind::Format, "matrix size out of range");
    const std::size_t row_bytes = (dim + 7) / 8;
    const std::size_t expected = 9 + static_cast<std::size_t>(dim) * row_bytes + 4;
    if (data.size() != expected) throw MatrixFileError(MatrixFileError::Kind::Format, "file size mismatch");

    const std::uint32_t stored = get_u32le(data.data() + data.size() - 4);
    if (crc_of(data.first(data.size() - 4)) != stored) throw MatrixFileError(MatrixFileError::Kind::Invariant, "checksum mismatch");

    BitMatrix m(dim, dim);
    const std::uint8_t* rows = data.data() + 9;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::uint8_t* row = rows + i * row_bytes;
        for (std::size_t j = 0; j < dim; ++j) {
            if ((row[j / 8] >> (7 - j % 8)) & 1) m.set(i, j, true);
        }
        // Padding bits past column dim-1 must be zero.
        for (std::size_t j = dim; j < 8 * row_bytes; ++j) {
            if ((row[j / 8] >> (7 - j % 8)) & 1) throw MatrixFileError(MatrixFileError::Kind::Invariant, "nonzero padding bits");
        }
    }

    if (is_invertible(m)) throw MatrixFileError(MatrixFileError::Kind::Invariant, "matrix is invertible");
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t w = m.row_weight(i);
        if (w != 0 && w != 2) throw MatrixFileError(MatrixFileError::Kind::Invariant, "row weight invalid");
    }
    for (std::size_t j = 0; j < dim; ++j) {
        std::size_t w = m.col_weight(j);
        if (w != 0 && w != 2) throw MatrixFileError(MatrixFileError::Kind::Invariant, "column weight invalid");
    }
    return m;
}

void write_matrix_file(const std::string& path, const BitMatrix& m) {
    std::vector<std::uint8_t> bytes = encode_matrix_file(m);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw MatrixFileError(MatrixFileError::Kind::Format, "cannot open file for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw MatrixFileError(MatrixFileError::Kind::Format, "write failed: " + path);
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw MatrixFileError(MatrixFileError::Kind::Format, "cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return decode_matrix_file(bytes);
}

}  // namespace gf2hash
