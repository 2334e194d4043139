#pragma once

#include "cyclocover/field.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cyclocover {

/// Element of F[t, 1/t].
///
/// Stored densely as the coefficient run from the lowest to the highest
/// exponent. Both ends of the run are nonzero; the zero polynomial has an
/// empty run. Units of the ring are exactly the monomials c*t^k.
class LaurentPoly {
public:
    LaurentPoly() : LaurentPoly(Field::rationals()) {}
    explicit LaurentPoly(Field field) : field_(field) {}

    static LaurentPoly zero(Field f) { return LaurentPoly(f); }
    static LaurentPoly one(Field f) { return monomial(FieldElem::one(f), 0); }
    static LaurentPoly monomial(const FieldElem& c, std::int64_t exponent);
    /// t^k - 1.
    static LaurentPoly t_power_minus_one(Field f, std::int64_t k);
    /// sum coeffs[i] * t^(low + i).
    static LaurentPoly from_coefficients(Field f, std::int64_t low, const std::vector<long long>& coeffs);
    static LaurentPoly from_coefficients(std::int64_t low, std::vector<FieldElem> coeffs);

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Nonzero monomial c*t^k.
    bool is_unit() const { return coeffs_.size() == 1; }
    bool is_one() const { return is_unit() && low_ == 0 && coeffs_.front().is_one(); }

    /// Lowest and highest exponents; throw DomainError on zero.
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;
    /// max exponent minus min exponent; additive under multiplication.
    std::uint64_t degree() const;

    /// Coefficient of t^e (zero outside the support).
    FieldElem coefficient(std::int64_t e) const;
    const FieldElem& leading_coefficient() const;
    /// (exponent, coefficient) pairs with nonzero coefficients, ascending.
    std::vector<std::pair<std::int64_t, FieldElem>> terms() const;

    /// Multiplies by t^k.
    LaurentPoly shifted(std::int64_t k) const;
    LaurentPoly scaled(const FieldElem& c) const;
    /// Unit associate that is monic with lowest exponent 0.
    LaurentPoly normalized() const;
    /// The unit u with normalized() == u * (*this). Requires nonzero.
    LaurentPoly normalizing_unit() const;
    /// Inverse of a unit.
    LaurentPoly unit_inverse() const;

    /// Evaluation at a nonzero field element.
    FieldElem evaluate(const FieldElem& z) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string(std::string_view var = "t") const;

private:
    void trim();
    void check_same(const LaurentPoly& o) const;

    Field field_;
    std::int64_t low_ = 0;
    std::vector<FieldElem> coeffs_;
};

/// Euclidean division in F[t, 1/t] with respect to Laurent degree:
/// a = q*b + r with r == 0 or degree(r) < degree(b). Throws on b == 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// True when b divides a in F[t, 1/t]. Throws on b == 0.
bool divides(const LaurentPoly& b, const LaurentPoly& a);
/// a / b, throwing DomainError when the division is not exact.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

/// Normalized gcd; throws DomainError when both inputs are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Throws DomainError on zero.
std::uint64_t laurent_degree(const LaurentPoly& p);

std::uint64_t euler_totient(std::uint64_t n);

/// k-th cyclotomic polynomial over Q.
LaurentPoly cyclotomic(std::uint64_t k, Field field = Field::rationals());

/// {k : Phi_k divides p}. Characteristic 0 only.
std::set<std::uint64_t> cyclotomic_orders(const LaurentPoly& p);

} // namespace cyclocover
