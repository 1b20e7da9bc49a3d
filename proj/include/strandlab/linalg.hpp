#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strandlab/field.hpp"

namespace strandlab {

struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer-valued sparse matrix; entries are interpreted in whatever field
/// rank() is asked to work over. Zero values are dropped on construction,
/// so a value that is nonzero over Z may still vanish mod p.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    /// Throws std::invalid_argument on an out-of-range or repeated (row, col).
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Sorted by (row, col).
    const std::vector<MatrixEntry>& entries() const { return entries_; }

    SparseMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

/// Integer product a*b, used for chain-condition checks. Throws on
/// dimension mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct RankOptions {
    /// GF(2) matrices with rows*cols at most this many bits use dense
    /// bit-packed elimination; GF(p) and Q go dense below limit/64 cells.
    std::size_t dense_bit_limit = std::size_t{1} << 26;
};

/// Exact rank over the given field.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field, const RankOptions& options = {});

} // namespace strandlab
