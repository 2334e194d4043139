#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic beyond reading coefficients out of its types.

#include "cyclocover/chain_complex.hpp"
#include "cyclocover/laurent.hpp"
#include "cyclocover/random_objects.hpp"

#include <gmpxx.h>

#include <complex>
#include <map>
#include <numbers>
#include <vector>

namespace testing_support {

using namespace cyclocover;

// Rational Laurent polynomial as exponent -> coefficient.
using QPoly = std::map<std::int64_t, mpq_class>;

inline QPoly to_qpoly(const LaurentPoly& p) {
    QPoly out;
    for (const auto& [e, c] : p.terms()) out[e] = c.rational();
    return out;
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline QPoly qpoly(std::int64_t low, std::vector<long long> coeffs) {
    QPoly out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) out[low + static_cast<std::int64_t>(i)] = mpq_class(static_cast<long>(coeffs[i]));
    }
    return out;
}

// Residues mod p, same layout.
using PPoly = std::map<std::int64_t, std::uint64_t>;

inline PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t p) {
    PPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) out[ea + eb] = (out[ea + eb] + ca * cb) % p;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline PPoly to_ppoly(const LaurentPoly& p) {
    PPoly out;
    for (const auto& [e, c] : p.terms()) out[e] = c.residue();
    return out;
}

inline std::complex<double> eval_complex(const LaurentPoly& p, std::complex<double> z) {
    std::complex<double> s = 0;
    for (const auto& [e, c] : p.terms()) s += c.rational().get_d() * std::pow(z, static_cast<int>(e));
    return s;
}

inline std::complex<double> primitive_root(std::uint64_t k) {
    return std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(k));
}

// Plain rational Gaussian elimination; deliberately the textbook version.
inline std::size_t naive_rank_q(std::vector<std::vector<mpq_class>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t naive_rank_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    auto inv = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * x % p);
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % p);
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t pinv = inv(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const std::uint64_t f = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a[r][c]) * pinv % p);
            for (std::size_t k = c; k < cols; ++k) {
                const auto sub = static_cast<std::uint64_t>(static_cast<unsigned __int128>(f) * a[rank][k] % p);
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

inline std::size_t naive_rank(const FieldMatrix& m) {
    if (m.field().is_rational()) {
        std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).rational();
        return naive_rank_q(std::move(a));
    }
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).residue();
    return naive_rank_p(std::move(a), m.field().characteristic());
}

// Cover Betti numbers through a separately written block expansion: t acts on
// F[Z/d] by index shift, entry (i, j) of the block of c*t^e is c iff i = j + e mod d.
inline std::vector<std::size_t> reference_cover_betti(const ChainComplexOverR& c, std::size_t d) {
    const auto& dims = c.dims();
    std::vector<std::size_t> ranks(dims.size() + 1, 0);
    for (std::size_t j = 1; j < dims.size(); ++j) {
        const RMatrix& b = c.boundaries()[j - 1];
        FieldMatrix big(c.field(), b.rows() * d, b.cols() * d);
        const auto dd = static_cast<std::int64_t>(d);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t s = 0; s < b.cols(); ++s) {
                for (const auto& [e, coef] : b(r, s).terms()) {
                    for (std::size_t col = 0; col < d; ++col) {
                        const auto row = static_cast<std::size_t>((((static_cast<std::int64_t>(col) + e) % dd) + dd) % dd);
                        big(r * d + row, s * d + col) += coef;
                    }
                }
            }
        }
        ranks[j] = naive_rank(big);
    }
    std::vector<std::size_t> betti;
    for (std::size_t j = 0; j < dims.size(); ++j) betti.push_back(dims[j] * d - ranks[j] - ranks[j + 1]);
    return betti;
}

// A fixed seeded corpus of small rational complexes.
inline std::vector<ChainComplexOverR> random_q_corpus(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ChainComplexOverR> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_complex(Field::rationals(), rng));
    return out;
}

inline std::vector<ChainComplexOverR> random_p_corpus(std::uint64_t p, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    RandomComplexOptions opts;
    opts.max_cells = 4;
    std::vector<ChainComplexOverR> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_complex(Field::prime(p), rng, opts));
    return out;
}

} // namespace testing_support
