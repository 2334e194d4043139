#include "cyclocover/random_objects.hpp"

#include <algorithm>
#include <numeric>

namespace cyclocover {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Torsion menu for Q, weighted toward roots of unity so that covers see them.
LaurentPoly menu_poly(Field field, Rng& rng, std::size_t max_degree) {
    static const std::vector<std::vector<long long>> menu = {
        {-1, 1},     // t - 1
        {1, 1},      // t + 1
        {1, 1, 1},   // Phi_3
        {1, 0, 1},   // Phi_4
        {1, -1, 1},  // Phi_6
        {-1, 0, 1},  // t^2 - 1
        {2, 1},      // t + 2
        {1, -3, 1},  // t^2 - 3t + 1
    };
    for (;;) {
        const auto& c = menu[uniform(rng, 0, menu.size() - 1)];
        if (c.size() - 1 <= max_degree) return LaurentPoly::from_coefficients(field, 0, c);
    }
}

LaurentPoly nonzero_poly(Field field, Rng& rng, std::size_t max_degree) {
    for (;;) {
        LaurentPoly p = random_laurent(field, rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

} // namespace

FieldElem random_scalar(Field field, Rng& rng, int coeff_bound) {
    if (field.is_rational()) {
        return FieldElem::from_int(field, std::uniform_int_distribution<int>(-coeff_bound, coeff_bound)(rng));
    }
    return FieldElem::from_residue(field, rng() % field.characteristic());
}

LaurentPoly random_laurent(Field field, Rng& rng, std::size_t max_degree, std::int64_t low, int coeff_bound) {
    std::vector<FieldElem> coeffs;
    for (std::size_t i = 0; i <= max_degree; ++i) coeffs.push_back(random_scalar(field, rng, coeff_bound));
    return LaurentPoly::from_coefficients(low, std::move(coeffs));
}

RMatrix random_rmatrix(Field field, Rng& rng, std::size_t rows, std::size_t cols, std::size_t max_degree,
                       double zero_probability) {
    RMatrix m(field, rows, cols);
    std::bernoulli_distribution zero(zero_probability);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!zero(rng)) m(i, j) = random_laurent(field, rng, uniform(rng, 0, max_degree));
        }
    }
    return m;
}

ChainComplexOverR random_complex(Field field, Rng& rng, const RandomComplexOptions& options) {
    const std::size_t length = uniform(rng, 1, std::max<std::size_t>(options.max_length, 1));
    std::vector<std::size_t> dims(length);
    for (auto& n : dims) n = uniform(rng, 1, options.max_cells);

    std::vector<RMatrix> boundaries;
    for (std::size_t j = 1; j < length; ++j) boundaries.emplace_back(field, dims[j - 1], dims[j]);

    // Cells of C_j not yet used as the target of d_{j+1}; each cell takes at most one role.
    std::vector<std::vector<std::size_t>> free_cells(length);
    for (std::size_t j = 0; j < length; ++j) {
        free_cells[j].resize(dims[j]);
        std::iota(free_cells[j].begin(), free_cells[j].end(), std::size_t{0});
        std::shuffle(free_cells[j].begin(), free_cells[j].end(), rng);
    }

    // Walk from the top so a cell of C_j is either a source of d_j or a target of d_{j+1}.
    for (std::size_t j = length - 1; j >= 1; --j) {
        auto& sources = free_cells[j];
        auto& targets = free_cells[j - 1];
        RMatrix& d = boundaries[j - 1];
        while (!sources.empty() && !targets.empty()) {
            const std::size_t kind = uniform(rng, 0, 5);
            if (kind == 0) break;  // leave the rest free
            std::size_t ns = 1, nt = 1;
            if (kind == 5) {
                ns = uniform(rng, 1, std::min<std::size_t>(2, sources.size()));
                nt = uniform(rng, 1, std::min<std::size_t>(2, targets.size()));
            }
            for (std::size_t a = 0; a < nt; ++a) {
                for (std::size_t b = 0; b < ns; ++b) {
                    const std::size_t r = targets[targets.size() - 1 - a];
                    const std::size_t c = sources[sources.size() - 1 - b];
                    switch (kind) {
                        case 1:
                        case 2: d(r, c) = menu_poly(field, rng, options.max_entry_degree); break;
                        case 3: d(r, c) = LaurentPoly::monomial(FieldElem::one(field), static_cast<std::int64_t>(uniform(rng, 0, options.max_entry_degree))); break;
                        case 4: d(r, c) = nonzero_poly(field, rng, options.max_entry_degree); break;
                        default: d(r, c) = random_laurent(field, rng, options.max_entry_degree); break;
                    }
                }
            }
            sources.resize(sources.size() - ns);
            targets.resize(targets.size() - nt);
        }
    }

    // Scalar change of basis G on C_j: d_{j+1} -> G d_{j+1}, d_j -> d_j G^-1.
    for (std::size_t move = 0; move < options.mixing_moves; ++move) {
        const std::size_t j = uniform(rng, 0, length - 1);
        if (dims[j] < 2) continue;
        const std::size_t a = uniform(rng, 0, dims[j] - 1);
        std::size_t b = uniform(rng, 0, dims[j] - 2);
        if (b >= a) ++b;
        const LaurentPoly c = LaurentPoly::monomial(FieldElem::from_int(field, uniform(rng, 0, 1) ? 1 : -1), 0);
        if (j + 1 < length) boundaries[j].add_row_multiple(a, b, c);
        if (j >= 1) boundaries[j - 1].add_col_multiple(b, a, -c);
    }

    return ChainComplexOverR(field, std::move(dims), std::move(boundaries));
}

} // namespace cyclocover
