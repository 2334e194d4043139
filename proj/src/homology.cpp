#include "cyclocover/homology.hpp"

#include "cyclocover/errors.hpp"

#include <string>

namespace cyclocover {

ModuleDecomposition cokernel_decomposition(const RMatrix& presentation) {
    const SmithForm snf = smith_normal_form(presentation);
    const std::size_t r = snf.rank();
    ModuleDecomposition dec;
    dec.free_rank = presentation.rows() - r;
    for (std::size_t i = 0; i < r; ++i) {
        const LaurentPoly& d = snf.d(i, i);
        if (!d.is_unit()) dec.divisors.push_back(d);
    }
    return dec;
}

ModuleDecomposition homology_module(const ChainComplexOverR& c, std::size_t j) {
    if (j > c.top_degree()) {
        throw InputError("degree " + std::to_string(j) + " exceeds the top degree " + std::to_string(c.top_degree()));
    }
    const RMatrix outgoing = c.boundary(j);     // d_j
    const RMatrix incoming = c.boundary(j + 1); // d_{j+1}
    const std::size_t n = c.dims()[j];

    const SmithForm snf = smith_normal_form(outgoing);
    const std::size_t r = snf.rank();
    // Columns r..n-1 of V span ker d_j. Since d_j d_{j+1} = 0 the first r rows of
    // V^{-1} d_{j+1} vanish and the remaining rows are kernel coordinates.
    const RMatrix coords = snf.v_inverse * incoming;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < coords.cols(); ++k) {
            if (!coords(i, k).is_zero()) throw InvalidComplex("image of d_" + std::to_string(j + 1) + " leaves ker d_" + std::to_string(j));
        }
    }
    return cokernel_decomposition(coords.row_block(r, n));
}

std::vector<ModuleDecomposition> homology_modules(const ChainComplexOverR& c) {
    std::vector<ModuleDecomposition> out;
    for (std::size_t j = 0; j <= c.top_degree(); ++j) out.push_back(homology_module(c, j));
    return out;
}

} // namespace cyclocover
