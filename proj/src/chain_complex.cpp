#include "cyclocover/chain_complex.hpp"

#include "cyclocover/errors.hpp"

#include <string>

namespace cyclocover {

namespace {

std::string shape(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

template <class Matrix>
void check_shapes(const std::vector<std::size_t>& dims, const std::vector<Matrix>& boundaries, Field field) {
    if (dims.empty()) throw InvalidComplex("a complex needs at least one degree");
    if (boundaries.size() != dims.size() - 1) {
        throw InvalidComplex("expected " + std::to_string(dims.size() - 1) + " boundary matrices, got " +
                             std::to_string(boundaries.size()));
    }
    for (std::size_t j = 1; j < dims.size(); ++j) {
        const auto& b = boundaries[j - 1];
        if (!(b.field() == field)) throw FieldMismatch("boundary " + std::to_string(j) + " is over " + b.field().to_string());
        if (b.rows() != dims[j - 1] || b.cols() != dims[j]) {
            throw InvalidComplex("boundary " + std::to_string(j) + " has shape " + shape(b.rows(), b.cols()) +
                                 ", expected " + shape(dims[j - 1], dims[j]));
        }
    }
}

} // namespace

ChainComplexOverR::ChainComplexOverR(Field field, std::vector<std::size_t> dims, std::vector<RMatrix> boundaries)
    : field_(field), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    check_shapes(dims_, boundaries_, field_);
    for (std::size_t j = 1; j + 1 < dims_.size(); ++j) {
        if (!(boundaries_[j - 1] * boundaries_[j]).is_zero()) {
            throw InvalidComplex("d_" + std::to_string(j) + " o d_" + std::to_string(j + 1) + " != 0");
        }
    }
}

RMatrix ChainComplexOverR::boundary(std::size_t j) const {
    if (j >= 1 && j <= top_degree()) return boundaries_[j - 1];
    const std::size_t rows = (j >= 1 && j - 1 < dims_.size()) ? dims_[j - 1] : 0;
    const std::size_t cols = j < dims_.size() ? dims_[j] : 0;
    return RMatrix(field_, rows, cols);
}

FieldComplex::FieldComplex(Field field, std::vector<std::size_t> dims, std::vector<FieldMatrix> boundaries)
    : field_(field), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    check_shapes(dims_, boundaries_, field_);
}

FieldMatrix shift_block(const LaurentPoly& p, std::size_t d) {
    const Field f = p.field();
    FieldMatrix block(f, d, d);
    const auto dd = static_cast<std::int64_t>(d);
    // P e_j = e_{j+1 mod d}, so P^e has a one at (i, j) exactly when i == j + e (mod d).
    for (const auto& [e, c] : p.terms()) {
        const std::int64_t s = ((e % dd) + dd) % dd;
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t i = (j + static_cast<std::size_t>(s)) % d;
            block(i, j) += c;
        }
    }
    return block;
}

FieldComplex tensor_to_field(const ChainComplexOverR& c, std::size_t d) {
    if (d == 0) throw InputError("cover degree d must be positive");
    const Field f = c.field();
    std::vector<std::size_t> dims;
    for (std::size_t n : c.dims()) dims.push_back(n * d);
    std::vector<FieldMatrix> boundaries;
    for (const auto& b : c.boundaries()) {
        FieldMatrix big(f, b.rows() * d, b.cols() * d);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(i, j).is_zero()) continue;
                const FieldMatrix block = shift_block(b(i, j), d);
                for (std::size_t a = 0; a < d; ++a) {
                    for (std::size_t e = 0; e < d; ++e) big(i * d + a, j * d + e) = block(a, e);
                }
            }
        }
        boundaries.push_back(std::move(big));
    }
    return FieldComplex(f, std::move(dims), std::move(boundaries));
}

ChainComplexOverR direct_sum(const ChainComplexOverR& a, const ChainComplexOverR& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("direct sum across fields");
    const Field f = a.field();
    const std::size_t len = std::max(a.dims().size(), b.dims().size());
    auto dim_at = [](const ChainComplexOverR& c, std::size_t j) { return j < c.dims().size() ? c.dims()[j] : 0; };
    std::vector<std::size_t> dims(len);
    for (std::size_t j = 0; j < len; ++j) dims[j] = dim_at(a, j) + dim_at(b, j);
    std::vector<RMatrix> boundaries;
    for (std::size_t j = 1; j < len; ++j) {
        RMatrix m(f, dims[j - 1], dims[j]);
        const std::size_t ar = dim_at(a, j - 1), ac = dim_at(a, j);
        if (j < a.dims().size()) {
            const RMatrix& ab = a.boundaries()[j - 1];
            for (std::size_t r = 0; r < ar; ++r)
                for (std::size_t s = 0; s < ac; ++s) m(r, s) = ab(r, s);
        }
        if (j < b.dims().size()) {
            const RMatrix& bb = b.boundaries()[j - 1];
            for (std::size_t r = 0; r < bb.rows(); ++r)
                for (std::size_t s = 0; s < bb.cols(); ++s) m(ar + r, ac + s) = bb(r, s);
        }
        boundaries.push_back(std::move(m));
    }
    return ChainComplexOverR(f, std::move(dims), std::move(boundaries));
}

} // namespace cyclocover
