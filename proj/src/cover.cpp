#include "cyclocover/cover.hpp"

#include "cyclocover/errors.hpp"
#include "cyclocover/homology.hpp"

#include <exception>
#include <numeric>
#include <string>

namespace cyclocover {

std::vector<std::size_t> betti_numbers(const FieldComplex& c, Execution exec) {
    const auto& dims = c.dims();
    for (std::size_t j = 1; j + 1 < dims.size(); ++j) {
        if (!(c.boundary(j) * c.boundary(j + 1)).is_zero()) {
            throw InvalidComplex("d_" + std::to_string(j) + " o d_" + std::to_string(j + 1) + " != 0");
        }
    }
    std::vector<std::size_t> ranks(dims.size() + 1, 0);  // ranks[j] = rank d_j; d_0 and d_{top+1} are zero
    for (std::size_t j = 1; j < dims.size(); ++j) ranks[j] = rank(c.boundary(j), exec);
    std::vector<std::size_t> betti(dims.size());
    for (std::size_t j = 0; j < dims.size(); ++j) betti[j] = dims[j] - ranks[j] - ranks[j + 1];
    return betti;
}

std::vector<std::size_t> cover_betti_oracle(const ChainComplexOverR& c, std::size_t d, Execution exec) {
    return betti_numbers(tensor_to_field(c, d), exec);
}

std::size_t BettiContribution::total() const {
    return std::accumulate(coker_terms.begin(), coker_terms.end(), free_term) +
           std::accumulate(ker_terms.begin(), ker_terms.end(), std::size_t{0});
}

BettiContribution cover_betti_contribution(const ModuleDecomposition& dec_k, const ModuleDecomposition& dec_km1,
                                           std::size_t d) {
    if (d == 0) throw InputError("cover degree d must be positive");
    BettiContribution out;
    out.free_term = d * dec_k.free_rank;
    auto gcd_degree = [d](const LaurentPoly& p) {
        return gcd(p, LaurentPoly::t_power_minus_one(p.field(), static_cast<std::int64_t>(d))).degree();
    };
    // coker of (t^d - 1) on R/(p) is R/gcd; its kernel is isomorphic to R/gcd as well.
    for (const auto& p : dec_k.divisors) out.coker_terms.push_back(gcd_degree(p));
    for (const auto& p : dec_km1.divisors) out.ker_terms.push_back(gcd_degree(p));
    return out;
}

std::size_t cover_betti_formula(const ModuleDecomposition& dec_k, const ModuleDecomposition& dec_km1, std::size_t d) {
    return cover_betti_contribution(dec_k, dec_km1, d).total();
}

std::vector<std::size_t> cover_betti_formula_all(const std::vector<ModuleDecomposition>& decs, std::size_t d) {
    std::vector<std::size_t> out;
    const ModuleDecomposition none;
    for (std::size_t k = 0; k < decs.size(); ++k) {
        out.push_back(cover_betti_formula(decs[k], k == 0 ? none : decs[k - 1], d));
    }
    return out;
}

bool CoverBettiReport::consistent() const {
    if (!betti_formula || !betti_oracle) return true;
    return *betti_formula == *betti_oracle;
}

std::vector<CoverBettiReport> cover_reports(const ChainComplexOverR& c, const std::vector<std::size_t>& ds,
                                            Routes routes, Execution exec) {
    for (std::size_t d : ds) {
        if (d == 0) throw InputError("cover degree d must be positive");
    }
    std::vector<ModuleDecomposition> decs;
    if (routes != Routes::oracle_only) decs = homology_modules(c);

    std::vector<CoverBettiReport> reports(ds.size());
    std::vector<std::exception_ptr> errors(ds.size());
    const auto count = static_cast<long long>(ds.size());
    const bool parallel = exec == Execution::parallel;
    // Inside the fan-out each rank runs serially; nested parallel regions only add overhead.
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
#endif
    for (long long idx = 0; idx < count; ++idx) {
        const auto i = static_cast<std::size_t>(idx);
        try {
            CoverBettiReport& r = reports[i];
            r.d = ds[i];
            if (routes != Routes::oracle_only) {
                std::vector<std::size_t> betti;
                const ModuleDecomposition none;
                for (std::size_t k = 0; k < decs.size(); ++k) {
                    r.contributions.push_back(cover_betti_contribution(decs[k], k == 0 ? none : decs[k - 1], r.d));
                    betti.push_back(r.contributions.back().total());
                }
                r.betti_formula = std::move(betti);
            }
            if (routes != Routes::formula_only) r.betti_oracle = cover_betti_oracle(c, r.d, Execution::serial);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    (void)parallel;
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

} // namespace cyclocover
