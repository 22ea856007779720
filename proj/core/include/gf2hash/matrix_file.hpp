#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2hash/gf2.hpp"

namespace gf2hash {

// On-disk matrix format (all integers little-endian):
//   magic    4 bytes  "GF2M"
//   version  1 byte   0x01
//   m        4 bytes  matrix dimension
//   rows     m * ceil(m/8) bytes, row i packed MSB-first
//   crc32    4 bytes  CRC32 of all preceding bytes
// Loading rejects any file whose matrix is invertible or whose row or
// column weights fall outside {0, 2}: only sums of two permutation
// matrices are valid shared parameters.

class MatrixFileError : public std::runtime_error {
public:
    // Format: the file is unreadable or structurally malformed.
    // Invariant: well-formed but fails a verification check (checksum,
    // singularity, row/column weights).
    enum class Kind { Format, Invariant };

    MatrixFileError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::vector<std::uint8_t> encode_matrix_file(const BitMatrix& m);
BitMatrix decode_matrix_file(std::span<const std::uint8_t> data);

void write_matrix_file(const std::string& path, const BitMatrix& m);
BitMatrix read_matrix_file(const std::string& path);

}  // namespace gf2hash
