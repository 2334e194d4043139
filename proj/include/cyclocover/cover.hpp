#pragma once

#include "cyclocover/chain_complex.hpp"
#include "cyclocover/field_matrix.hpp"
#include "cyclocover/smith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cyclocover {

/// b_j = dim C_j - rank d_j - rank d_{j+1}. Validates d o d == 0 (InvalidComplex).
std::vector<std::size_t> betti_numbers(const FieldComplex& c, Execution exec = Execution::parallel);

/// Betti numbers of the d-fold cyclic cover by building the block complex and ranking it.
/// Shares no code with the module decomposition route.
std::vector<std::size_t> cover_betti_oracle(const ChainComplexOverR& c, std::size_t d,
                                            Execution exec = Execution::parallel);

/// Pieces of the long-exact-sequence count for b_k(X_d).
struct BettiContribution {
    std::size_t free_term = 0;                 // d * n1 at degree k
    std::vector<std::uint64_t> coker_terms;    // deg gcd(p, t^d - 1), p a divisor at degree k
    std::vector<std::uint64_t> ker_terms;      // deg gcd(p, t^d - 1), p a divisor at degree k-1

    std::size_t total() const;
};

BettiContribution cover_betti_contribution(const ModuleDecomposition& dec_k, const ModuleDecomposition& dec_km1,
                                           std::size_t d);

/// b_k(X_d; F) = d*n1(k) + sum deg gcd(p_i(k), t^d - 1) + sum deg gcd(p_j(k-1), t^d - 1).
/// For k == 0 pass an empty decomposition as dec_km1. Throws InputError when d == 0.
std::size_t cover_betti_formula(const ModuleDecomposition& dec_k, const ModuleDecomposition& dec_km1, std::size_t d);

/// Formula route over all degrees, given the decompositions of every H_j(C; R).
std::vector<std::size_t> cover_betti_formula_all(const std::vector<ModuleDecomposition>& decs, std::size_t d);

enum class Routes { both, formula_only, oracle_only };

struct CoverBettiReport {
    std::size_t d = 0;
    std::optional<std::vector<std::size_t>> betti_formula;
    std::optional<std::vector<std::size_t>> betti_oracle;
    std::vector<BettiContribution> contributions;  // per degree, present with the formula route

    /// True unless both routes ran and disagree somewhere.
    bool consistent() const;
};

/// One report per requested d, ordered as the input. The per-d work is
/// independent and runs concurrently under Execution::parallel.
std::vector<CoverBettiReport> cover_reports(const ChainComplexOverR& c, const std::vector<std::size_t>& ds,
                                            Routes routes = Routes::both, Execution exec = Execution::parallel);

} // namespace cyclocover
