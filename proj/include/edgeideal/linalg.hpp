#ifndef EDGEIDEAL_LINALG_HPP
#define EDGEIDEAL_LINALG_HPP

#include <cstdint>
#include <vector>

#include "edgeideal/common.hpp"

namespace edgeideal {

/// Dense integer matrix, row-major. Boundary matrices are tiny at this scale.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Appends the columns of `other` (same row count).
    IntMatrix hconcat(const IntMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact rank. Over Q this is fraction-free (Bareiss) elimination in 64-bit
/// integers, redone in arbitrary precision if an intermediate overflows.
std::size_t rank(const IntMatrix& m, Field field);

/// Basis of the right null space {v : m v = 0}. Over Q the vectors are
/// scaled to primitive integer vectors; over GF(p) entries lie in [0, p).
/// Throws Arithmetic if a rational basis vector does not fit in 64 bits.
std::vector<std::vector<std::int64_t>> kernel_basis(const IntMatrix& m, Field field);

}  // namespace edgeideal

#endif
