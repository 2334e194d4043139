#pragma once

#include "cyclocover/chain_complex.hpp"

#include <cstdint>
#include <random>

namespace cyclocover {

using Rng = std::mt19937_64;

/// Coefficients in [-coeff_bound, coeff_bound] over Q, uniform residues over F_p.
FieldElem random_scalar(Field field, Rng& rng, int coeff_bound = 3);

/// Random polynomial with exponents in [low, low + max_degree]; may be zero.
LaurentPoly random_laurent(Field field, Rng& rng, std::size_t max_degree, std::int64_t low = 0, int coeff_bound = 3);

RMatrix random_rmatrix(Field field, Rng& rng, std::size_t rows, std::size_t cols, std::size_t max_degree,
                       double zero_probability = 0.2);

struct RandomComplexOptions {
    std::size_t max_length = 4;   // number of chain groups C_0..C_{max_length-1}
    std::size_t max_cells = 5;    // per degree
    std::size_t max_entry_degree = 2;
    std::size_t mixing_moves = 6;
};

/// Direct sum of small elementary pieces (torsion, unit, free, small random
/// blocks) hidden behind a scalar change of basis in every degree. Entries stay
/// polynomials with exponents in [0, max_entry_degree]; d o d = 0 holds exactly.
ChainComplexOverR random_complex(Field field, Rng& rng, const RandomComplexOptions& options = {});

} // namespace cyclocover
