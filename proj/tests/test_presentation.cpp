#include "cyclocover/builtins.hpp"
#include "cyclocover/errors.hpp"
#include "cyclocover/homology.hpp"
#include "cyclocover/presentation.hpp"
#include "cyclocover/random_objects.hpp"

#include <doctest.h>

using namespace cyclocover;

namespace {

const Field Q = Field::rationals();

LaurentPoly poly(std::int64_t low, std::vector<long long> c, Field f = Q) {
    return LaurentPoly::from_coefficients(f, low, c);
}

GroupWord random_word(Rng& rng, std::size_t generators, std::size_t length) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < length; ++i) {
        letters.push_back(Letter{std::uniform_int_distribution<std::size_t>(0, generators - 1)(rng),
                                 std::bernoulli_distribution(0.5)(rng) ? 1 : -1});
    }
    return GroupWord(std::move(letters));
}

} // namespace

TEST_CASE("word parsing") {
    const auto w = parse_word("xyX Y", "xy");
    REQUIRE(w.length() == 4);
    CHECK(w.letters()[0] == Letter{0, 1});
    CHECK(w.letters()[2] == Letter{0, -1});
    CHECK(parse_word("xX", "xy").reduced().is_identity());
    CHECK((w * w.inverse()).reduced().is_identity());
    CHECK_THROWS_AS(parse_word("xz", "xy"), InputError);
}

TEST_CASE("fox derivative rules") {
    const auto x = GroupWord::generator(0);
    const auto xi = GroupWord::generator(0, -1);
    CHECK(fox_derivative(x, 0) == FreeGroupRingElem::identity());
    CHECK(fox_derivative(xi, 0) == FreeGroupRingElem::of(xi, -1));
    CHECK(fox_derivative(x, 1).is_zero());
    // d(x^3)/dx = 1 + x + x^2
    const auto x3 = parse_word("xxx", "x");
    CHECK(fox_derivative(x3, 0) == FreeGroupRingElem::identity() + FreeGroupRingElem::of(x) +
                                       FreeGroupRingElem::of(parse_word("xx", "x")));
}

TEST_CASE("fundamental identity of Fox calculus") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const auto w = random_word(rng, n, std::uniform_int_distribution<std::size_t>(0, 12)(rng));
        FreeGroupRingElem lhs;
        for (std::size_t g = 0; g < n; ++g) {
            lhs += fox_derivative(w, g) * (FreeGroupRingElem::of(GroupWord::generator(g)) - FreeGroupRingElem::identity());
        }
        CHECK(lhs == FreeGroupRingElem::of(w.reduced()) - FreeGroupRingElem::identity());
    }
}

TEST_CASE("presentation complexes") {
    const auto circle = presentation_to_complex(Presentation::make(Q, "x", {}, {1}));
    REQUIRE(circle.dims() == std::vector<std::size_t>{1, 1});
    CHECK(circle.boundary(1)(0, 0) == poly(0, {-1, 1}));

    const auto trefoil = *builtin_presentation("trefoil", Q);
    const auto c = presentation_to_complex(trefoil);
    CHECK(c.dims() == std::vector<std::size_t>{1, 2, 1});
    // Fox Jacobian of xyxY X Y at x, y -> t: d/dx = 1 + xy - xyxY X, d/dy = x - xyxY - xyxY X Y
    CHECK(c.boundary(2)(0, 0) == poly(0, {1, 0, 1}) - poly(1, {1}));
    CHECK(c.boundary(2)(1, 0) == poly(1, {1}) - poly(2, {1}) - poly(0, {1}));
    CHECK(homology_module(c, 1).divisors == std::vector<LaurentPoly>{poly(0, {1, -1, 1})});

    CHECK_THROWS_AS(presentation_to_complex(Presentation::make(Q, "x", {"xxx"}, {1})), InputError);
    CHECK_THROWS_AS(Presentation::make(Q, "xy", {}, {2, 4}).validate(), InputError);
    CHECK_NOTHROW(Presentation::make(Q, "xy", {}, {2, 3}).validate());
}

TEST_CASE("characters twist the complex") {
    auto p = Presentation::make(Q, "x", {}, {1});
    p.psi = {FieldElem::from_int(Q, -1)};
    const auto c = presentation_to_complex(p);
    CHECK(c.boundary(1)(0, 0) == poly(0, {-1, -1}));
    // H_0 = R/(t + 1)
    CHECK(homology_module(c, 0).divisors == std::vector<LaurentPoly>{poly(0, {1, 1})});

    // relator xyXY needs psi(x)psi(y)psi(x)^-1 psi(y)^-1 = 1, always true
    auto torus = Presentation::make(Q, "xy", {"xyXY"}, {1, 0});
    torus.psi = {FieldElem::from_int(Q, 2), FieldElem::from_int(Q, 3)};
    CHECK_NOTHROW(torus.validate());
    // xx has phi-weight 0 but psi-product 4
    auto bad = Presentation::make(Q, "xy", {"xx"}, {0, 1});
    bad.psi = {FieldElem::from_int(Q, 2), FieldElem::one(Q)};
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("presentation complexes satisfy d o d = 0 on random relators") {
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        const auto w = random_word(rng, 2, 10);
        // balance the phi-weight by appending a correcting power of y
        long weight = 0;
        for (const auto& l : w.letters()) weight += l.exponent;
        std::vector<Letter> letters = w.letters();
        for (long k = 0; k < std::abs(weight); ++k) letters.push_back(Letter{1, weight > 0 ? -1 : 1});
        Presentation p;
        p.field = Q;
        p.generator_names = "xy";
        p.relators = {GroupWord(letters).reduced()};
        p.phi = {1, 1};
        p.psi = {FieldElem::one(Q), FieldElem::one(Q)};
        CHECK_NOTHROW(presentation_to_complex(p));  // the constructor checks d1 d2 == 0
    }
}
