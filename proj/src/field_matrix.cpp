#include "cyclocover/field_matrix.hpp"

#include "cyclocover/errors.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>

namespace cyclocover {

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field)) {}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(field);
    return m;
}

bool FieldMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product across fields");
    if (a.cols_ != b.rows_) throw InputError("shape mismatch in matrix product");
    FieldMatrix c(a.field_, a.rows_, b.cols_);
    // Boundary matrices of covers are very sparse; skip zero factors.
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElem& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix sum across fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("shape mismatch in matrix sum");
    FieldMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("matrix difference across fields");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("shape mismatch in matrix difference");
    FieldMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
    return c;
}

namespace {

std::vector<mpz_class> integer_rows(const FieldMatrix& m) {
    std::vector<mpz_class> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& q = m(i, j).rational();
            if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& q = m(i, j).rational();
            out[i * m.cols() + j] = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

// Fraction-free echelon reduction. Entries below the pivot rows are minors of
// the original matrix, so the division by the previous pivot is exact.
std::size_t bareiss_rank(std::vector<mpz_class> a, std::size_t rows, std::size_t cols, bool parallel) {
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        }
        const mpz_class& p = a[r * cols + c];
        const auto count = static_cast<long long>(rows - r - 1);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel && count > 8)
#endif
        for (long long off = 0; off < count; ++off) {
            const std::size_t i = r + 1 + static_cast<std::size_t>(off);
            mpz_class& lead = a[i * cols + c];
            mpz_class tmp;
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class& x = a[i * cols + j];
                x *= p;
                tmp = lead * a[r * cols + j];
                x -= tmp;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = p;
        ++r;
    }
    (void)parallel;
    return r;
}

std::size_t modular_rank(const FieldMatrix& m, bool parallel) {
    const std::uint64_t p = m.field().characteristic();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).residue();
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        }
        const std::uint64_t inv = modular::inverse(a[r * cols + c], p);
        const auto count = static_cast<long long>(rows - r - 1);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (parallel && count > 32)
#endif
        for (long long off = 0; off < count; ++off) {
            const std::size_t i = r + 1 + static_cast<std::size_t>(off);
            const std::uint64_t factor = modular::mul(a[i * cols + c], inv, p);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] = modular::sub(a[i * cols + j], modular::mul(factor, a[r * cols + j], p), p);
            }
        }
        ++r;
    }
    (void)parallel;
    return r;
}

std::size_t rank_impl(const FieldMatrix& m, bool parallel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_prime_field()) return modular_rank(m, parallel);
    return bareiss_rank(integer_rows(m), m.rows(), m.cols(), parallel);
}

} // namespace

std::size_t rank_serial(const FieldMatrix& m) {
    return rank_impl(m, false);
}

std::size_t rank_parallel(const FieldMatrix& m) {
    return rank_impl(m, true);
}

std::size_t rank(const FieldMatrix& m, Execution exec) {
    return exec == Execution::serial ? rank_serial(m) : rank_parallel(m);
}

FieldMatrix companion_matrix(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("companion matrix of the zero polynomial");
    const LaurentPoly q = p.normalized();
    const Field f = q.field();
    const std::size_t n = q.degree();
    FieldMatrix c(f, n, n);
    // t * t^i = t^(i+1) for i < n-1; t * t^(n-1) = -(q_0 + q_1 t + ... + q_(n-1) t^(n-1)).
    for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = FieldElem::one(f);
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -q.coefficient(static_cast<std::int64_t>(i));
    return c;
}

FieldMatrix evaluate_at_matrix(const LaurentPoly& f, const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("polynomial evaluation needs a square matrix");
    if (!(f.field() == m.field())) throw FieldMismatch("polynomial and matrix over different fields");
    FieldMatrix acc(m.field(), m.rows(), m.cols());
    if (f.is_zero()) return acc;
    if (f.min_exponent() < 0) throw DomainError("evaluate_at_matrix needs nonnegative exponents");
    for (std::int64_t e = f.max_exponent(); e >= 0; --e) {
        acc = acc * m;
        const FieldElem c = f.coefficient(e);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c;
    }
    return acc;
}

} // namespace cyclocover
