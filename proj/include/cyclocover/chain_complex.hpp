#pragma once

#include "cyclocover/field_matrix.hpp"
#include "cyclocover/rmatrix.hpp"

#include <cstddef>
#include <vector>

namespace cyclocover {

/// Finite free chain complex of F[t, 1/t]-modules C_top -> ... -> C_0.
///
/// boundary(j) is the matrix of d_j : C_j -> C_{j-1} acting on column vectors,
/// so it has dims[j-1] rows and dims[j] columns. Construction validates shapes
/// and d_{j} * d_{j+1} == 0 exactly.
class ChainComplexOverR {
public:
    ChainComplexOverR(Field field, std::vector<std::size_t> dims, std::vector<RMatrix> boundaries);

    Field field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t top_degree() const { return dims_.size() - 1; }
    /// d_j for 1 <= j <= top; an empty matrix of the right shape outside that range.
    RMatrix boundary(std::size_t j) const;
    const std::vector<RMatrix>& boundaries() const { return boundaries_; }

private:
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<RMatrix> boundaries_;  // boundaries_[j-1] == d_j
};

/// Finite chain complex of F-vector spaces, same conventions as ChainComplexOverR.
class FieldComplex {
public:
    FieldComplex(Field field, std::vector<std::size_t> dims, std::vector<FieldMatrix> boundaries);

    Field field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const FieldMatrix& boundary(std::size_t j) const { return boundaries_.at(j - 1); }
    const std::vector<FieldMatrix>& boundaries() const { return boundaries_; }

private:
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<FieldMatrix> boundaries_;
};

/// Matrix of sum c_a t^(e_a) acting on F[t]/(t^d - 1): the block sum c_a P^(e_a)
/// with P the cyclic shift of order d.
FieldMatrix shift_block(const LaurentPoly& p, std::size_t d);

/// C (x)_R R/(t^d - 1) as an F-complex: every entry becomes a d x d block.
/// Throws InputError when d == 0.
FieldComplex tensor_to_field(const ChainComplexOverR& c, std::size_t d);

/// Direct sum of two complexes (padded to the longer length).
ChainComplexOverR direct_sum(const ChainComplexOverR& a, const ChainComplexOverR& b);

} // namespace cyclocover
