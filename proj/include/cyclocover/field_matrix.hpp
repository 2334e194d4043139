#pragma once

#include "cyclocover/field.hpp"
#include "cyclocover/laurent.hpp"

#include <cstddef>
#include <vector>

namespace cyclocover {

/// Dense matrix over Q or F_p, row-major.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);

    static FieldMatrix identity(Field field, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) = default;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElem> entries_;
};

/// How the rank kernels run.
enum class Execution {
    serial,    // reference implementation
    parallel,  // OpenMP row updates (falls back to serial without OpenMP)
};

/// Exact rank. Q matrices are cleared of denominators row by row and reduced
/// by fraction-free (Bareiss) elimination over the integers; F_p matrices by
/// Gaussian elimination on word-size residues.
std::size_t rank(const FieldMatrix& m, Execution exec = Execution::parallel);

std::size_t rank_serial(const FieldMatrix& m);
std::size_t rank_parallel(const FieldMatrix& m);

/// Companion matrix of a nonzero polynomial, after normalization: the matrix
/// of multiplication by t on R/(p) in the basis 1, t, ..., t^(n-1).
FieldMatrix companion_matrix(const LaurentPoly& p);

/// f(M) for a square matrix M. f must not have negative exponents.
FieldMatrix evaluate_at_matrix(const LaurentPoly& f, const FieldMatrix& m);

} // namespace cyclocover
