#include "cyclocover/builtins.hpp"
#include "cyclocover/errors.hpp"
#include "cyclocover/homology.hpp"
#include "cyclocover/smith.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cyclocover;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

LaurentPoly poly(std::int64_t low, std::vector<long long> c, Field f = Q) {
    return LaurentPoly::from_coefficients(f, low, c);
}

bool is_diagonal(const RMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && !d(i, j).is_zero()) return false;
    return true;
}

void check_smith(const RMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    REQUIRE(s.u.rows() == a.rows());
    REQUIRE(s.v.cols() == a.cols());
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_diagonal(s.d));
    CHECK(s.v * s.v_inverse == RMatrix::identity(a.field(), a.cols()));
    CHECK(determinant(s.u).is_unit());
    CHECK(determinant(s.v).is_unit());
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i].is_zero()) {
            for (std::size_t j = i; j < diag.size(); ++j) CHECK(diag[j].is_zero());
            break;
        }
        CHECK(diag[i] == diag[i].normalized());
        if (i + 1 < diag.size() && !diag[i + 1].is_zero()) CHECK(divides(diag[i], diag[i + 1]));
    }
    CHECK(s.rank() == rank_over_fraction_field(a));
}

// rank over F(t) as the largest rank over a few rational specializations t = c
std::size_t specialized_rank(const RMatrix& a) {
    std::size_t best = 0;
    for (long c : {2L, 3L, 5L, -7L, 11L, 13L}) {
        FieldMatrix m(a.field(), a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!a(i, j).is_zero()) m(i, j) = a(i, j).evaluate(FieldElem::from_int(a.field(), c));
        best = std::max(best, naive_rank(m));
    }
    return best;
}

} // namespace

TEST_CASE("smith examples") {
    const auto tm1 = poly(0, {-1, 1});
    {
        const auto a = RMatrix::from_rows(Q, {{tm1, poly(0, {})}, {poly(0, {}), tm1}});
        const auto s = smith_normal_form(a);
        CHECK(s.diagonal() == std::vector<LaurentPoly>{tm1, tm1});
        check_smith(a);
    }
    {
        const auto a = RMatrix::from_rows(Q, {{poly(1, {1}), poly(0, {1})}, {poly(0, {}), tm1}});
        const auto s = smith_normal_form(a);
        CHECK(s.diagonal() == std::vector<LaurentPoly>{poly(0, {1}), tm1});
        check_smith(a);
    }
    {
        const RMatrix zero(Q, 2, 3);
        const auto s = smith_normal_form(zero);
        CHECK(s.d.is_zero());
        CHECK(s.u == RMatrix::identity(Q, 2));
        CHECK(s.v == RMatrix::identity(Q, 3));
    }
    {
        // diag(t - 1, t + 1) must become diag(1, t^2 - 1)
        const auto a = RMatrix::from_rows(Q, {{tm1, poly(0, {})}, {poly(0, {}), poly(0, {1, 1})}});
        CHECK(smith_normal_form(a).diagonal() == std::vector<LaurentPoly>{poly(0, {1}), poly(0, {-1, 0, 1})});
        check_smith(a);
    }
    CHECK(smith_normal_form(RMatrix(Q, 0, 3)).rank() == 0);
}

TEST_CASE("fraction field rank examples") {
    CHECK(rank_over_fraction_field(RMatrix::identity(Q, 3)) == 3);
    CHECK(rank_over_fraction_field(RMatrix::from_rows(Q, {{poly(0, {-1, 1}), poly(0, {-1, 1})}})) == 1);
    CHECK(rank_over_fraction_field(RMatrix::from_rows(Q, {{poly(1, {1}), poly(0, {1})}, {poly(2, {1}), poly(1, {1})}})) == 1);
    CHECK(determinant(RMatrix::from_rows(Q, {{poly(1, {1}), poly(0, {1})}, {poly(0, {}), poly(0, {-1, 1})}})) ==
          poly(1, {-1, 1}));
}

TEST_CASE("smith soundness on random matrices") {
    Rng rng(101);
    for (const Field f : {Q, Field::prime(5), Field::prime(2)}) {
        for (int i = 0; i < 60; ++i) {
            const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
            const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
            const auto a = random_rmatrix(f, rng, rows, cols, 3);
            check_smith(a);
            if (f.is_rational()) CHECK(rank_over_fraction_field(a) == specialized_rank(a));
        }
    }
}

TEST_CASE("smith is idempotent") {
    Rng rng(102);
    for (int i = 0; i < 40; ++i) {
        const auto a = random_rmatrix(Q, rng, 4, 3, 2);
        const auto d = smith_normal_form(a).d;
        CHECK(smith_normal_form(d).d == d);
    }
}

TEST_CASE("homology examples") {
    const auto tm1 = poly(0, {-1, 1});
    const auto circle = builtin_complex("circle");
    CHECK(homology_module(circle, 0) == ModuleDecomposition{0, {tm1}});
    CHECK(homology_module(circle, 1) == ModuleDecomposition{0, {}});
    CHECK_THROWS_AS(homology_module(circle, 2), InputError);

    const auto trefoil = builtin_complex("trefoil");
    CHECK(homology_module(trefoil, 1) == ModuleDecomposition{0, {poly(0, {1, -1, 1})}});
    CHECK(homology_module(builtin_complex("wedge2"), 1) == ModuleDecomposition{1, {}});
    CHECK(homology_module(builtin_complex("figure8"), 1) == ModuleDecomposition{0, {poly(0, {1, -3, 1})}});
    CHECK(homology_module(builtin_complex("phi3"), 0) == ModuleDecomposition{0, {poly(0, {1, 1, 1})}});
}

TEST_CASE("cokernel of a diagonal presentation") {
    const auto a = RMatrix::from_rows(Q, {{poly(0, {-1, 1}), poly(0, {})}, {poly(0, {}), poly(3, {2})}, {poly(0, {}), poly(0, {})}});
    const auto dec = cokernel_decomposition(a);
    CHECK(dec.free_rank == 1);
    CHECK(dec.divisors == std::vector<LaurentPoly>{poly(0, {-1, 1})});
    CHECK(dec.torsion_dimension() == 1);
}

TEST_CASE("free ranks satisfy the Euler characteristic") {
    for (const Field f : {Q, Field::prime(3)}) {
        Rng rng(55 + f.characteristic());
        for (int i = 0; i < 40; ++i) {
            const auto c = random_complex(f, rng);
            const auto decs = homology_modules(c);
            long lhs = 0, rhs = 0;
            for (std::size_t j = 0; j < decs.size(); ++j) {
                const long sign = j % 2 == 0 ? 1 : -1;
                lhs += sign * static_cast<long>(decs[j].free_rank);
                rhs += sign * static_cast<long>(c.dims()[j]);
            }
            CHECK(lhs == rhs);
            // per-degree: n1 = dim - rank d_j - rank d_{j+1} over F(t)
            for (std::size_t j = 0; j < decs.size(); ++j) {
                const std::size_t expect = c.dims()[j] - rank_over_fraction_field(c.boundary(j)) -
                                           rank_over_fraction_field(c.boundary(j + 1));
                CHECK(decs[j].free_rank == expect);
                for (const auto& p : decs[j].divisors) {
                    CHECK_FALSE(p.is_unit());
                    CHECK(p == p.normalized());
                }
            }
        }
    }
}
