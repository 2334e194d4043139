#pragma once

#include "cyclocover/chain_complex.hpp"
#include "cyclocover/field_matrix.hpp"
#include "cyclocover/smith.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace cyclocover {

/// H = R^n1 (+) (+)_i R/((t-1) q_i) (+) (+)_i R/(p_i) with no p_i divisible by t - 1.
struct ThreeParts {
    std::size_t free_rank = 0;
    std::vector<LaurentPoly> unipotent;  // divisors divisible by t - 1 (stored whole)
    std::vector<LaurentPoly> coprime;    // divisors coprime to t - 1
};

ThreeParts split_three_parts(const ModuleDecomposition& dec);

/// Orders k >= 2 of roots of unity that are roots of the divisors coprime to t - 1.
std::set<std::uint64_t> root_of_unity_orders(const ModuleDecomposition& dec);

struct ExceptionalModulus {
    std::uint64_t modulus = 1;          // product of the distinct orders in both sets
    std::set<std::uint64_t> k_level;    // from H_k(X; R)
    std::set<std::uint64_t> km1_level;  // from H_{k-1}(X; R)
};

/// Characteristic 0 only (Unsupported otherwise).
ExceptionalModulus exceptional_modulus(const ModuleDecomposition& dec_k, const ModuleDecomposition& dec_km1);

/// Product of the orders taken with multiplicity, as a big integer.
mpz_class modulus_with_multiplicity(const std::vector<std::uint64_t>& orders);
mpz_class distinct_order_modulus(const std::vector<std::uint64_t>& orders);

struct CoverCheck {
    std::size_t d = 0;
    std::size_t cover_betti = 0;  // b_k(X_d), from the oracle
    bool equivalent = false;      // (b_k(X_d) == 0) == base_vanishes
};

struct VanishingCertificate {
    std::size_t k = 0;
    bool base_vanishes = false;
    std::size_t base_betti = 0;
    ExceptionalModulus modulus;
    std::vector<CoverCheck> verified;   // every d <= d_max with gcd(d, m) == 1
    std::vector<CoverCheck> witnesses;  // the remaining d <= d_max, recorded as-is
};

/// Builds and oracle-checks the certificate for degree k over d = 1..d_max.
/// Throws VerificationFailure if a coprime d breaks the biconditional and
/// Unsupported for characteristic-p complexes.
VanishingCertificate vanishing_certificate(const ChainComplexOverR& c, std::size_t k, std::size_t d_max,
                                           Execution exec = Execution::parallel);

struct PPowerReport {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::size_t k = 0;
    std::size_t cover_degree = 0;  // p^r
    std::size_t base_dim = 0;      // b_k(X_1; F_p)
    std::size_t cover_dim = 0;     // b_k(X_{p^r}; F_p)
    bool equivalent = false;
};

inline constexpr std::size_t kMaxPPowerDegree = 1024;

/// Compares H_k(X_1; F_p) and H_k(X_{p^r}; F_p) by direct oracle computation.
/// Throws FieldMismatch unless the complex is over F_p with this p, InputError
/// if p^r exceeds kMaxPPowerDegree.
PPowerReport p_power_equivalence(const ChainComplexOverR& c, std::uint64_t p, unsigned r, std::size_t k);

/// Injectivity/surjectivity of a linear map between finite-dimensional spaces.
struct MapProperties {
    bool injective = false;
    bool surjective = false;
};

/// Multiplication by f on R/(p), realized as f(C_p) for the companion matrix C_p.
/// f is first moved to nonnegative exponents, which does not change the answer
/// because t acts invertibly on R/(p).
MapProperties multiplication_on_torsion(const LaurentPoly& f, const LaurentPoly& p);

/// Multiplication by f on the free module R, seen on the window of polynomials
/// of degree < window: the map F[t]_{<window} -> F[t]_{<window + deg f}.
MapProperties multiplication_on_free(const LaurentPoly& f, std::size_t window);

} // namespace cyclocover
