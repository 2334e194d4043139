#include "cyclocover/builtins.hpp"
#include "cyclocover/chain_complex.hpp"
#include "cyclocover/cover.hpp"
#include "cyclocover/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cyclocover;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

LaurentPoly poly(std::int64_t low, std::vector<long long> c, Field f = Q) {
    return LaurentPoly::from_coefficients(f, low, c);
}

FieldMatrix cyclic_shift(Field f, std::size_t d) {
    FieldMatrix p(f, d, d);
    for (std::size_t j = 0; j < d; ++j) p((j + 1) % d, j) = FieldElem::one(f);
    return p;
}

FieldMatrix random_field_matrix(Field f, Rng& rng, std::size_t rows, std::size_t cols, double density) {
    FieldMatrix m(f, rows, cols);
    std::bernoulli_distribution nz(density);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (nz(rng)) m(i, j) = random_scalar(f, rng, 4);
    return m;
}

} // namespace

TEST_CASE("complex validation") {
    CHECK_NOTHROW(ChainComplexOverR(Q, {1, 1}, {RMatrix::from_rows(Q, {{poly(0, {-1, 1})}})}));
    CHECK_THROWS_AS(ChainComplexOverR(Q, {1, 2}, {RMatrix::from_rows(Q, {{poly(0, {1})}})}), InvalidComplex);
    // d1 d2 != 0
    const auto d1 = RMatrix::from_rows(Q, {{poly(0, {1})}});
    const auto d2 = RMatrix::from_rows(Q, {{poly(0, {1})}});
    CHECK_THROWS_AS(ChainComplexOverR(Q, {1, 1, 1}, {d1, d2}), InvalidComplex);
    CHECK_THROWS_AS(ChainComplexOverR(Q, {}, {}), InvalidComplex);
    const auto c = builtin_complex("trefoil");
    CHECK(c.boundary(0).rows() == 0);
    CHECK(c.boundary(0).cols() == 1);
    CHECK(c.boundary(3).rows() == 1);
    CHECK(c.boundary(3).cols() == 0);
}

TEST_CASE("tensor_to_field examples") {
    const auto circle = builtin_complex("circle");
    const auto f3 = tensor_to_field(circle, 3);
    CHECK(f3.boundary(1) == cyclic_shift(Q, 3) - FieldMatrix::identity(Q, 3));
    CHECK(rank(f3.boundary(1)) == 2);

    const auto phi3 = builtin_complex("phi3");
    const auto p = cyclic_shift(Q, 3);
    const auto g = tensor_to_field(phi3, 3);
    CHECK(g.boundary(1) == p * p + p + FieldMatrix::identity(Q, 3));
    CHECK(rank(g.boundary(1)) == 1);

    // d = 1 evaluates at t = 1
    const auto t = builtin_complex("trefoil");
    const auto t1 = tensor_to_field(t, 1);
    for (std::size_t j = 1; j <= t.top_degree(); ++j) {
        const auto& b = t.boundary(j);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t s = 0; s < b.cols(); ++s)
                CHECK(t1.boundary(j)(r, s) == b(r, s).evaluate(FieldElem::one(Q)));
    }
    CHECK_THROWS_AS(tensor_to_field(t, 0), InputError);
}

TEST_CASE("shift blocks follow the reference expansion") {
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        const auto p = random_laurent(Q, rng, 4, std::uniform_int_distribution<int>(-6, 3)(rng));
        const auto block = shift_block(p, d);
        // sum c P^e with P^-1 = P^(d-1)
        FieldMatrix expect(Q, d, d);
        const auto shift = cyclic_shift(Q, d);
        for (const auto& [e, c] : p.terms()) {
            FieldMatrix power = FieldMatrix::identity(Q, d);
            const auto reps = static_cast<std::size_t>(((e % static_cast<std::int64_t>(d)) + static_cast<std::int64_t>(d)) % static_cast<std::int64_t>(d));
            for (std::size_t k = 0; k < reps; ++k) power = power * shift;
            FieldMatrix scaled(Q, d, d);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) scaled(a, b) = power(a, b) * c;
            expect = expect + scaled;
        }
        CHECK(block == expect);
    }
}

TEST_CASE("tensor dimensions and direct sums") {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_complex(Q, rng);
        const auto b = random_complex(Q, rng);
        const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        const auto ta = tensor_to_field(a, d);
        for (std::size_t j = 0; j < a.dims().size(); ++j) CHECK(ta.dims()[j] == d * a.dims()[j]);

        const auto sum = direct_sum(a, b);
        const auto ts = tensor_to_field(sum, d);
        const auto tb = tensor_to_field(b, d);
        // Betti numbers of the sum are the sums of Betti numbers
        const auto bs = betti_numbers(ts);
        const auto ba = betti_numbers(ta);
        const auto bb = betti_numbers(tb);
        for (std::size_t j = 0; j < bs.size(); ++j) {
            const std::size_t x = j < ba.size() ? ba[j] : 0;
            const std::size_t y = j < bb.size() ? bb[j] : 0;
            CHECK(bs[j] == x + y);
        }
        // and the blocks sit on the diagonal
        for (std::size_t j = 1; j < sum.dims().size(); ++j) {
            const auto& m = ts.boundary(j);
            const std::size_t ra = j - 1 < a.dims().size() ? ta.dims()[j - 1] : 0;
            const std::size_t ca = j < a.dims().size() ? ta.dims()[j] : 0;
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t s = 0; s < m.cols(); ++s) {
                    if (r < ra && s < ca) {
                        CHECK(m(r, s) == ta.boundary(j)(r, s));
                    } else if (r >= ra && s >= ca) {
                        CHECK(m(r, s) == tb.boundary(j)(r - ra, s - ca));
                    } else {
                        CHECK(m(r, s).is_zero());
                    }
                }
        }
    }
}

TEST_CASE("betti numbers of plain complexes") {
    CHECK(betti_numbers(FieldComplex(Q, {2}, {})) == std::vector<std::size_t>{2});
    CHECK(betti_numbers(tensor_to_field(builtin_complex("circle"), 1)) == std::vector<std::size_t>{1, 1});
    const auto acyclic = ChainComplexOverR(Q, {1, 1}, {RMatrix::from_rows(Q, {{poly(0, {1})}})});
    CHECK(betti_numbers(tensor_to_field(acyclic, 1)) == std::vector<std::size_t>{0, 0});
    FieldMatrix one(Q, 1, 1);
    one(0, 0) = FieldElem::one(Q);
    CHECK_THROWS_AS(betti_numbers(FieldComplex(Q, {1, 1, 1}, {one, one})), InvalidComplex);
}

TEST_CASE("rank kernels agree with textbook elimination") {
    Rng rng(31);
    for (const Field f : {Q, Field::prime(2), Field::prime(5), Field::prime(Field::kMaxPrime)}) {
        for (int i = 0; i < 80; ++i) {
            const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
            const std::size_t cols = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
            auto m = random_field_matrix(f, rng, rows, cols, i % 3 == 0 ? 0.1 : 0.6);
            // plant dependencies
            if (rows > 3) {
                for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * FieldElem::from_int(f, 3) - m(1, j);
            }
            const std::size_t expect = naive_rank(m);
            CHECK(rank_serial(m) == expect);
            CHECK(rank_parallel(m) == expect);
        }
    }
}

TEST_CASE("serial and parallel ranks agree on larger inputs") {
    Rng rng(32);
    for (const Field f : {Q, Field::prime(7)}) {
        for (int i = 0; i < 4; ++i) {
            const auto c = random_complex(f, rng);
            const auto fc = tensor_to_field(c, 25);
            for (const auto& b : fc.boundaries()) CHECK(rank_serial(b) == rank_parallel(b));
        }
        auto m = random_field_matrix(f, rng, 150, 120, 0.3);
        CHECK(rank_serial(m) == rank_parallel(m));
    }
}

TEST_CASE("companion matrices") {
    const auto p = poly(-1, {2, -3, 1});  // t^-1 (t^2 - 3t + 2)
    const auto c = companion_matrix(p);
    REQUIRE(c.rows() == 2);
    // the companion matrix is a root of its polynomial
    CHECK(evaluate_at_matrix(p.normalized(), c).is_zero());
    CHECK(companion_matrix(poly(0, {5})).rows() == 0);
    CHECK_THROWS_AS(evaluate_at_matrix(poly(-1, {1}), c), DomainError);
}
