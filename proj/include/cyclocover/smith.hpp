#pragma once

#include "cyclocover/rmatrix.hpp"

#include <vector>

namespace cyclocover {

/// U * A * V == D with D diagonal, normalized, d1 | d2 | ... and U, V invertible.
/// v_inverse is V^{-1}; it is maintained alongside V so kernel coordinates can
/// be read off without a separate inversion.
struct SmithForm {
    RMatrix u;
    RMatrix d;
    RMatrix v;
    RMatrix v_inverse;

    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
    std::vector<LaurentPoly> diagonal() const;
};

/// Euclidean Smith reduction. Pivots are chosen by minimal Laurent degree,
/// ties broken by row-major position.
SmithForm smith_normal_form(const RMatrix& a);

/// R^free_rank (+) R/(d1) (+) ... (+) R/(ds); each di normalized, non-unit, di | d(i+1).
struct ModuleDecomposition {
    std::size_t free_rank = 0;
    std::vector<LaurentPoly> divisors;

    /// Sum of Laurent degrees of the torsion divisors (F-dimension of the torsion part).
    std::uint64_t torsion_dimension() const;
    bool is_zero() const { return free_rank == 0 && divisors.empty(); }

    friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;
};

} // namespace cyclocover
