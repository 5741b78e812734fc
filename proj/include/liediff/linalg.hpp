#pragma once

#include "liediff/ratfunc.hpp"

#include <optional>
#include <vector>

namespace liediff {

/// Dense row-major matrix of field elements.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    static FieldMatrix identity(std::size_t n, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<RatFunc> row(std::size_t i) const;
    FieldMatrix columns(const std::vector<std::size_t>& which) const;
    FieldMatrix transposed() const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<RatFunc> data_;
};

// Fraction-free (Bareiss) elimination with row pivoting; returns the rank.
std::size_t bareiss_rank(FieldMatrix m);

// Determinant of a square matrix via Bareiss; the last pivot is det up to
// the sign of the row swaps.
RatFunc bareiss_determinant(FieldMatrix m);

// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<FieldMatrix> inverse(const FieldMatrix& m);

// A nonzero vector x with m x = 0, or nullopt if the columns are independent.
// The first free column (in column order) gets coefficient 1.
std::optional<std::vector<RatFunc>> null_vector(const FieldMatrix& m);

} // namespace liediff
