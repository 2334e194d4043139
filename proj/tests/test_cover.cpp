#include "cyclocover/builtins.hpp"
#include "cyclocover/cover.hpp"
#include "cyclocover/errors.hpp"
#include "cyclocover/homology.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cyclocover;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

LaurentPoly poly(std::int64_t low, std::vector<long long> c, Field f = Q) {
    return LaurentPoly::from_coefficients(f, low, c);
}

using V = std::vector<std::size_t>;

} // namespace

TEST_CASE("formula examples") {
    const ModuleDecomposition circle0{0, {poly(0, {-1, 1})}};
    for (std::size_t d = 1; d <= 8; ++d) CHECK(cover_betti_formula({}, circle0, d) == 1);

    const ModuleDecomposition tref1{0, {poly(0, {1, -1, 1})}};
    CHECK(cover_betti_formula(tref1, circle0, 6) == 3);
    const auto contrib = cover_betti_contribution(tref1, circle0, 6);
    CHECK(contrib.free_term == 0);
    CHECK(contrib.coker_terms == std::vector<std::uint64_t>{2});
    CHECK(contrib.ker_terms == std::vector<std::uint64_t>{1});

    CHECK(cover_betti_formula({1, {}}, circle0, 5) == 6);
    CHECK_THROWS_AS(cover_betti_formula(tref1, circle0, 0), InputError);
}

TEST_CASE("oracle examples") {
    CHECK(cover_betti_oracle(builtin_complex("circle"), 4) == V{1, 1});
    CHECK(cover_betti_oracle(builtin_complex("phi3"), 3) == V{2, 2});
    CHECK(cover_betti_oracle(builtin_complex("wedge2"), 5) == V{1, 6});
    CHECK(cover_betti_oracle(builtin_complex("trefoil"), 6) == V{1, 3, 2});
    CHECK(cover_betti_oracle(builtin_complex("trefoil"), 1) == V{1, 1, 0});
    CHECK_THROWS_AS(cover_betti_oracle(builtin_complex("circle"), 0), InputError);
}

TEST_CASE("oracle matches an independently written block expansion") {
    Rng rng(41);
    for (const Field f : {Q, Field::prime(3)}) {
        for (int i = 0; i < 25; ++i) {
            const auto c = random_complex(f, rng);
            const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
            CHECK(cover_betti_oracle(c, d, Execution::serial) == reference_cover_betti(c, d));
        }
    }
}

TEST_CASE("formula agrees with the oracle") {
    std::vector<ChainComplexOverR> corpus;
    for (const auto& name : builtin_names()) corpus.push_back(builtin_complex(name));
    for (auto& c : random_q_corpus(30, 2024)) corpus.push_back(std::move(c));
    for (auto& c : random_p_corpus(2, 10, 9)) corpus.push_back(std::move(c));
    for (auto& c : random_p_corpus(5, 10, 10)) corpus.push_back(std::move(c));
    std::vector<std::size_t> ds(12);
    std::iota(ds.begin(), ds.end(), std::size_t{1});
    for (const auto& c : corpus) {
        for (const auto& r : cover_reports(c, ds)) {
            REQUIRE(r.betti_formula);
            REQUIRE(r.betti_oracle);
            CHECK(*r.betti_formula == *r.betti_oracle);
            for (std::size_t k = 0; k < r.contributions.size(); ++k) CHECK(r.contributions[k].total() == (*r.betti_formula)[k]);
        }
    }
}

TEST_CASE("report routes and ordering") {
    const auto c = builtin_complex("trefoil");
    const std::vector<std::size_t> ds{7, 3, 12};
    const auto both = cover_reports(c, ds);
    REQUIRE(both.size() == 3);
    CHECK(both[0].d == 7);
    CHECK(both[2].d == 12);
    const auto formula = cover_reports(c, ds, Routes::formula_only);
    CHECK_FALSE(formula[0].betti_oracle.has_value());
    CHECK(formula[2].betti_formula == both[2].betti_formula);
    const auto oracle = cover_reports(c, ds, Routes::oracle_only, Execution::serial);
    CHECK_FALSE(oracle[1].betti_formula.has_value());
    CHECK(oracle[1].betti_oracle == both[1].betti_oracle);
    CHECK_THROWS_AS(cover_reports(c, {2, 0}), InputError);
}

TEST_CASE("euler characteristic is multiplicative") {
    auto corpus = random_q_corpus(20, 77);
    for (const auto& name : builtin_names()) corpus.push_back(builtin_complex(name));
    for (const auto& c : corpus) {
        long chi = 0;
        for (std::size_t j = 0; j < c.dims().size(); ++j) chi += (j % 2 ? -1 : 1) * static_cast<long>(c.dims()[j]);
        for (std::size_t d = 1; d <= 12; ++d) {
            const auto b = cover_betti_oracle(c, d);
            long chid = 0;
            for (std::size_t j = 0; j < b.size(); ++j) chid += (j % 2 ? -1 : 1) * static_cast<long>(b[j]);
            CHECK(chid == static_cast<long>(d) * chi);
        }
    }
}

TEST_CASE("betti numbers over d approach the free rank") {
    auto corpus = random_q_corpus(12, 91);
    for (const auto& name : builtin_names()) corpus.push_back(builtin_complex(name));
    for (const auto& c : corpus) {
        const auto decs = homology_modules(c);
        for (std::size_t d = 1; d <= 30; ++d) {
            const auto b = cover_betti_oracle(c, d);
            for (std::size_t k = 0; k < b.size(); ++k) {
                const double bound =
                    static_cast<double>(decs[k].torsion_dimension() + (k > 0 ? decs[k - 1].torsion_dimension() : 0)) /
                    static_cast<double>(d);
                CHECK(std::abs(static_cast<double>(b[k]) / static_cast<double>(d) -
                               static_cast<double>(decs[k].free_rank)) <= bound + 1e-12);
            }
        }
    }
}

TEST_CASE("cover betti numbers are bounded by p^r times the base over F_p") {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        for (const auto& c : random_p_corpus(p, 15, 300 + p)) {
            const auto base = cover_betti_oracle(c, 1);
            for (std::size_t q = p; q <= p * p; q *= p) {
                const auto cover = cover_betti_oracle(c, q);
                for (std::size_t k = 0; k < base.size(); ++k) CHECK(cover[k] <= q * base[k]);
            }
        }
    }
}
