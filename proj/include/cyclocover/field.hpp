#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cyclocover {

/// Coefficient field descriptor: characteristic 0 means Q, otherwise F_p.
class Field {
public:
    static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 61) - 1;

    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws InputError unless p is a prime not exceeding kMaxPrime.
    static Field prime(std::uint64_t p);
    /// Parses "q" or "fp:<p>".
    static Field parse(std::string_view text);

    constexpr std::uint64_t characteristic() const { return p_; }
    constexpr bool is_rational() const { return p_ == 0; }
    constexpr bool is_prime_field() const { return p_ != 0; }

    std::string to_string() const;

    friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    constexpr explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Element of Q (always in lowest terms) or of F_p (residue in [0, p)).
class FieldElem {
public:
    FieldElem() : FieldElem(Field::rationals()) {}
    explicit FieldElem(Field field);  // zero of the field

    static FieldElem zero(Field f) { return FieldElem(f); }
    static FieldElem one(Field f) { return from_int(f, 1); }
    static FieldElem from_int(Field f, long long v);
    /// Maps a rational into the field; for F_p the denominator must be invertible.
    static FieldElem from_rational(Field f, const mpq_class& q);
    static FieldElem from_residue(Field f, std::uint64_t r);
    /// Accepts "a", "-a/b" or, for F_p, any integer (reduced mod p).
    static FieldElem parse(Field f, std::string_view text);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; requires a Q element.
    const mpq_class& rational() const;
    /// Residue; requires an F_p element.
    std::uint64_t residue() const;

    FieldElem inverse() const;
    FieldElem pow(long long e) const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    std::string to_string() const;

private:
    void check_same(const FieldElem& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

namespace modular {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // a, b < 2^61 so no overflow
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

} // namespace modular

} // namespace cyclocover
