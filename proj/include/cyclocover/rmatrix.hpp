#pragma once

#include "cyclocover/laurent.hpp"

#include <cstddef>
#include <vector>

namespace cyclocover {

/// Dense matrix over F[t, 1/t], row-major.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(Field field, std::size_t rows, std::size_t cols);

    static RMatrix identity(Field field, std::size_t n);
    static RMatrix from_rows(Field field, const std::vector<std::vector<LaurentPoly>>& rows);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<LaurentPoly>& entries() const { return entries_; }

    bool is_zero() const;
    RMatrix transposed() const;
    /// Rows [r0, r1) as a new matrix.
    RMatrix row_block(std::size_t r0, std::size_t r1) const;

    // Elementary operations used by the Smith reduction.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const LaurentPoly& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const LaurentPoly& factor);
    void scale_row(std::size_t r, const LaurentPoly& unit);
    void scale_col(std::size_t c, const LaurentPoly& unit);

    friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
    friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
    friend bool operator==(const RMatrix& a, const RMatrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentPoly> entries_;
};

/// Determinant over F[t, 1/t] by fraction-free (Bareiss) elimination.
LaurentPoly determinant(const RMatrix& a);

/// Rank over the fraction field F(t), by fraction-free elimination.
std::size_t rank_over_fraction_field(const RMatrix& a);

} // namespace cyclocover
