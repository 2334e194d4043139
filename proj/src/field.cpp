#include "cyclocover/field.hpp"

#include "cyclocover/errors.hpp"

#include <charconv>
#include <string>

namespace cyclocover {

namespace modular {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2, p);
}

} // namespace modular

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = modular::pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = modular::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p > kMaxPrime) throw InputError("prime " + std::to_string(p) + " exceeds 2^61-1");
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw InputError("malformed field descriptor '" + std::string(text) + "'");
        }
        return prime(p);
    }
    throw InputError("unknown field descriptor '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const {
    return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

FieldElem::FieldElem(Field field) : field_(field) {
    if (field.is_prime_field()) value_ = std::uint64_t{0};
}

FieldElem FieldElem::from_int(Field f, long long v) {
    FieldElem e(f);
    if (f.is_rational()) {
        e.value_ = mpq_class(mpz_class(static_cast<long>(v)));
    } else {
        const auto p = static_cast<long long>(f.characteristic());  // p < 2^61
        long long m = v % p;
        if (m < 0) m += p;
        e.value_ = static_cast<std::uint64_t>(m);
    }
    return e;
}

FieldElem FieldElem::from_rational(Field f, const mpq_class& q) {
    FieldElem e(f);
    if (f.is_rational()) {
        e.value_ = q;
        std::get<mpq_class>(e.value_).canonicalize();
        return e;
    }
    const mpz_class pz(std::to_string(f.characteristic()));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw DomainError("denominator of " + q.get_str() + " vanishes in F_" + std::to_string(f.characteristic()));
    const auto n = std::stoull(num.get_str());
    const auto d = std::stoull(den.get_str());
    e.value_ = modular::mul(n, modular::inverse(d, f.characteristic()), f.characteristic());
    return e;
}

FieldElem FieldElem::from_residue(Field f, std::uint64_t r) {
    if (!f.is_prime_field()) throw FieldMismatch("residue given for a characteristic-0 field");
    FieldElem e(f);
    e.value_ = r % f.characteristic();
    return e;
}

FieldElem FieldElem::parse(Field f, std::string_view text) {
    mpq_class q;
    try {
        q = mpq_class(std::string(text));
    } catch (const std::invalid_argument&) {
        throw InputError("malformed number '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return from_rational(f, q);
}

bool FieldElem::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElem::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& FieldElem::rational() const {
    if (!field_.is_rational()) throw FieldMismatch("rational value requested from " + field_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t FieldElem::residue() const {
    if (field_.is_rational()) throw FieldMismatch("residue requested from a rational element");
    return std::get<std::uint64_t>(value_);
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!(field_ == o.field_)) {
        throw FieldMismatch("arithmetic between " + field_.to_string() + " and " + o.field_.to_string());
    }
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    FieldElem r(field_);
    if (field_.is_rational()) {
        mpq_class inv;
        mpq_inv(inv.get_mpq_t(), std::get<mpq_class>(value_).get_mpq_t());
        r.value_ = std::move(inv);
    } else {
        r.value_ = modular::inverse(std::get<std::uint64_t>(value_), field_.characteristic());
    }
    return r;
}

FieldElem FieldElem::pow(long long e) const {
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    FieldElem result = one(field_);
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

FieldElem FieldElem::operator-() const {
    FieldElem r(field_);
    if (field_.is_rational()) {
        r.value_ = mpq_class(-std::get<mpq_class>(value_));
    } else {
        r.value_ = modular::sub(0, std::get<std::uint64_t>(value_), field_.characteristic());
    }
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v = modular::add(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v = modular::sub(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
    }
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same(o);
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        auto& v = std::get<std::uint64_t>(value_);
        v = modular::mul(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.value_ == b.value_;
}

std::string FieldElem::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

} // namespace cyclocover
