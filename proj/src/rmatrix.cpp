#include "cyclocover/rmatrix.hpp"

#include "cyclocover/errors.hpp"

#include <string>

namespace cyclocover {

RMatrix::RMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPoly(field)) {}

RMatrix RMatrix::identity(Field field, std::size_t n) {
    RMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(field);
    return m;
}

RMatrix RMatrix::from_rows(Field field, const std::vector<std::vector<LaurentPoly>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    RMatrix m(field, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) {
            if (!(rows[i][j].field() == field)) throw FieldMismatch("matrix entry over " + rows[i][j].field().to_string());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

bool RMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

RMatrix RMatrix::transposed() const {
    RMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

RMatrix RMatrix::row_block(std::size_t r0, std::size_t r1) const {
    RMatrix b(field_, r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) b(i - r0, j) = (*this)(i, j);
    }
    return b;
}

void RMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void RMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void RMatrix::add_row_multiple(std::size_t dst, std::size_t src, const LaurentPoly& factor) {
    if (factor.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(src, j).is_zero()) (*this)(dst, j) += factor * (*this)(src, j);
    }
}

void RMatrix::add_col_multiple(std::size_t dst, std::size_t src, const LaurentPoly& factor) {
    if (factor.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(*this)(i, src).is_zero()) (*this)(i, dst) += factor * (*this)(i, src);
    }
}

void RMatrix::scale_row(std::size_t r, const LaurentPoly& unit) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = unit * (*this)(r, j);
}

void RMatrix::scale_col(std::size_t c, const LaurentPoly& unit) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = (*this)(i, c) * unit;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product across fields");
    if (a.cols_ != b.rows_) {
        throw InputError("shape mismatch in matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    RMatrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix sum across fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("shape mismatch in matrix sum");
    RMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

LaurentPoly determinant(const RMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    const Field f = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return LaurentPoly::one(f);
    RMatrix m = a;
    LaurentPoly prev = LaurentPoly::one(f);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return LaurentPoly(f);
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = LaurentPoly(f);
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::size_t rank_over_fraction_field(const RMatrix& a) {
    const Field f = a.field();
    RMatrix m = a;
    LaurentPoly prev = LaurentPoly::one(f);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, rank);
        const LaurentPoly p = m(rank, col);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                m(i, j) = exact_quotient(m(i, j) * p - m(i, col) * m(rank, j), prev);
            }
            m(i, col) = LaurentPoly(f);
        }
        prev = p;
        ++rank;
    }
    return rank;
}

} // namespace cyclocover
