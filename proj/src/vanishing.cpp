#include "cyclocover/vanishing.hpp"

#include "cyclocover/cover.hpp"
#include "cyclocover/errors.hpp"
#include "cyclocover/homology.hpp"

#include <numeric>
#include <string>

namespace cyclocover {

ThreeParts split_three_parts(const ModuleDecomposition& dec) {
    ThreeParts parts;
    parts.free_rank = dec.free_rank;
    for (const auto& p : dec.divisors) {
        const LaurentPoly t_minus_one = LaurentPoly::t_power_minus_one(p.field(), 1);
        (divides(t_minus_one, p) ? parts.unipotent : parts.coprime).push_back(p);
    }
    return parts;
}

std::set<std::uint64_t> root_of_unity_orders(const ModuleDecomposition& dec) {
    std::set<std::uint64_t> orders;
    for (const auto& p : split_three_parts(dec).coprime) {
        for (std::uint64_t k : cyclotomic_orders(p)) {
            if (k >= 2) orders.insert(k);
        }
    }
    return orders;
}

ExceptionalModulus exceptional_modulus(const ModuleDecomposition& dec_k, const ModuleDecomposition& dec_km1) {
    for (const auto* dec : {&dec_k, &dec_km1}) {
        for (const auto& p : dec->divisors) {
            if (!p.field().is_rational()) throw Unsupported("the exceptional modulus is defined in characteristic 0 only");
        }
    }
    ExceptionalModulus m;
    m.k_level = root_of_unity_orders(dec_k);
    m.km1_level = root_of_unity_orders(dec_km1);
    std::set<std::uint64_t> all = m.k_level;
    all.insert(m.km1_level.begin(), m.km1_level.end());
    for (std::uint64_t k : all) m.modulus *= k;
    return m;
}

mpz_class modulus_with_multiplicity(const std::vector<std::uint64_t>& orders) {
    mpz_class m = 1;
    for (std::uint64_t k : orders) m *= static_cast<unsigned long>(k);
    return m;
}

mpz_class distinct_order_modulus(const std::vector<std::uint64_t>& orders) {
    const std::set<std::uint64_t> distinct(orders.begin(), orders.end());
    return modulus_with_multiplicity(std::vector<std::uint64_t>(distinct.begin(), distinct.end()));
}

VanishingCertificate vanishing_certificate(const ChainComplexOverR& c, std::size_t k, std::size_t d_max,
                                           Execution exec) {
    if (!c.field().is_rational()) throw Unsupported("vanishing certificates need a characteristic-0 field");
    if (k > c.top_degree()) throw InputError("degree " + std::to_string(k) + " exceeds the top degree");
    if (d_max == 0) throw InputError("d_max must be positive");

    const ModuleDecomposition dec_k = homology_module(c, k);
    const ModuleDecomposition dec_km1 = k == 0 ? ModuleDecomposition{} : homology_module(c, k - 1);

    VanishingCertificate cert;
    cert.k = k;
    cert.modulus = exceptional_modulus(dec_k, dec_km1);

    std::vector<std::size_t> ds(d_max);
    std::iota(ds.begin(), ds.end(), std::size_t{1});
    const auto reports = cover_reports(c, ds, Routes::oracle_only, exec);
    cert.base_betti = (*reports.front().betti_oracle)[k];
    cert.base_vanishes = cert.base_betti == 0;

    for (const auto& r : reports) {
        CoverCheck check{r.d, (*r.betti_oracle)[k], false};
        check.equivalent = (check.cover_betti == 0) == cert.base_vanishes;
        if (std::gcd<std::uint64_t, std::uint64_t>(r.d, cert.modulus.modulus) == 1) {
            if (!check.equivalent) {
                throw VerificationFailure("certificate rejected: degree " + std::to_string(k) + ", d = " +
                                          std::to_string(r.d) + " is coprime to m = " +
                                          std::to_string(cert.modulus.modulus) + " but b_k(X_d) = " +
                                          std::to_string(check.cover_betti) + " while b_k(X_1) = " +
                                          std::to_string(cert.base_betti));
            }
            cert.verified.push_back(check);
        } else {
            cert.witnesses.push_back(check);
        }
    }
    return cert;
}

PPowerReport p_power_equivalence(const ChainComplexOverR& c, std::uint64_t p, unsigned r, std::size_t k) {
    if (c.field().characteristic() != p) {
        throw FieldMismatch("p-power check for p = " + std::to_string(p) + " on a complex over " + c.field().to_string());
    }
    if (r == 0) throw InputError("r must be positive");
    if (k > c.top_degree()) throw InputError("degree " + std::to_string(k) + " exceeds the top degree");
    std::size_t degree = 1;
    for (unsigned i = 0; i < r; ++i) {
        degree *= p;
        if (degree > kMaxPPowerDegree) throw InputError("p^r exceeds the configured bound " + std::to_string(kMaxPPowerDegree));
    }
    PPowerReport rep;
    rep.p = p;
    rep.r = r;
    rep.k = k;
    rep.cover_degree = degree;
    rep.base_dim = cover_betti_oracle(c, 1)[k];
    rep.cover_dim = cover_betti_oracle(c, degree)[k];
    rep.equivalent = (rep.base_dim == 0) == (rep.cover_dim == 0);
    return rep;
}

MapProperties multiplication_on_torsion(const LaurentPoly& f, const LaurentPoly& p) {
    const FieldMatrix companion = companion_matrix(p);
    const std::size_t n = companion.rows();
    if (f.is_zero()) return MapProperties{n == 0, n == 0};
    const FieldMatrix image = evaluate_at_matrix(f.shifted(-f.min_exponent()), companion);
    const std::size_t rk = rank(image, Execution::serial);
    return MapProperties{rk == n, rk == n};
}

MapProperties multiplication_on_free(const LaurentPoly& f, std::size_t window) {
    if (window == 0) throw InputError("window must be positive");
    const Field field = f.field();
    if (f.is_zero()) return MapProperties{false, false};
    const LaurentPoly g = f.shifted(-f.min_exponent());
    const std::size_t target = window + g.degree();
    FieldMatrix m(field, target, window);
    for (std::size_t j = 0; j < window; ++j) {
        for (const auto& [e, c] : g.terms()) m(j + static_cast<std::size_t>(e), j) = c;
    }
    const std::size_t rk = rank(m, Execution::serial);
    return MapProperties{rk == window, rk == target};
}

} // namespace cyclocover
