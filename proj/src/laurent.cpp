#include "cyclocover/laurent.hpp"

#include "cyclocover/errors.hpp"

#include <map>
#include <sstream>

namespace cyclocover {

namespace {

using Coeffs = std::vector<FieldElem>;

// Ordinary polynomial division on coefficient runs starting at t^0.
std::pair<Coeffs, Coeffs> poly_divmod(const Coeffs& a, const Coeffs& b, Field f) {
    Coeffs rem = a;
    if (rem.size() < b.size()) return {Coeffs{}, rem};
    Coeffs quot(rem.size() - b.size() + 1, FieldElem::zero(f));
    const FieldElem lead_inv = b.back().inverse();
    for (std::size_t i = rem.size(); i-- >= b.size();) {
        if (rem[i].is_zero()) continue;
        const FieldElem c = rem[i] * lead_inv;
        const std::size_t shift = i - (b.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    }
    rem.resize(b.size() - 1, FieldElem::zero(f));
    return {std::move(quot), std::move(rem)};
}

} // namespace

LaurentPoly LaurentPoly::monomial(const FieldElem& c, std::int64_t exponent) {
    LaurentPoly p(c.field());
    if (!c.is_zero()) {
        p.low_ = exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(Field f, std::int64_t k) {
    return monomial(FieldElem::one(f), k) - one(f);
}

LaurentPoly LaurentPoly::from_coefficients(Field f, std::int64_t low, const std::vector<long long>& coeffs) {
    Coeffs c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(FieldElem::from_int(f, v));
    LaurentPoly p(f);
    p.low_ = low;
    p.coeffs_ = std::move(c);
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t low, std::vector<FieldElem> coeffs) {
    if (coeffs.empty()) throw InputError("from_coefficients needs at least one coefficient to fix the field");
    LaurentPoly p(coeffs.front().field());
    for (const auto& c : coeffs) p.check_same(LaurentPoly(c.field()));
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1].is_zero()) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = Coeffs(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                         coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        low_ += static_cast<std::int64_t>(first);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (!(field_ == o.field_)) {
        throw FieldMismatch("Laurent polynomials over " + field_.to_string() + " and " + o.field_.to_string());
    }
}

std::int64_t LaurentPoly::min_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponents");
    return low_;
}

std::int64_t LaurentPoly::max_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponents");
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::uint64_t LaurentPoly::degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

FieldElem LaurentPoly::coefficient(std::int64_t e) const {
    if (is_zero() || e < low_ || e > max_exponent()) return FieldElem::zero(field_);
    return coeffs_[static_cast<std::size_t>(e - low_)];
}

const FieldElem& LaurentPoly::leading_coefficient() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::vector<std::pair<std::int64_t, FieldElem>> LaurentPoly::terms() const {
    std::vector<std::pair<std::int64_t, FieldElem>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::scaled(const FieldElem& c) const {
    if (!(c.field() == field_)) throw FieldMismatch("scalar from " + c.field().to_string() + " applied over " + field_.to_string());
    if (c.is_zero()) return zero(field_);
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::normalizing_unit() const {
    if (is_zero()) throw DomainError("zero polynomial has no normalizing unit");
    return monomial(coeffs_.back().inverse(), -low_);
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    return scaled(coeffs_.back().inverse()).shifted(-low_);
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw DomainError(to_string() + " is not a unit");
    return monomial(coeffs_.front().inverse(), -low_);
}

FieldElem LaurentPoly::evaluate(const FieldElem& z) const {
    if (!(z.field() == field_)) throw FieldMismatch("evaluation point from another field");
    if (is_zero()) return FieldElem::zero(field_);
    if (z.is_zero()) throw DomainError("Laurent polynomials are evaluated at nonzero points only");
    FieldElem acc = FieldElem::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= z;
        acc += coeffs_[i];
    }
    return acc * z.pow(low_);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const std::int64_t lo = std::min(low_, o.low_);
    const std::int64_t hi = std::max(max_exponent(), o.max_exponent());
    Coeffs out(static_cast<std::size_t>(hi - lo + 1), FieldElem::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    Coeffs out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.low_ = a.low_ + b.low_;
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto ts = terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool negative = field_.is_rational() && sgn(c.rational()) < 0;
        if (negative) cs = (-c).to_string();
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit_coeff = cs == "1";
        if (e == 0) {
            os << cs;
            continue;
        }
        if (!unit_coeff) os << cs << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const Field f = b.field();
    if (!(a.field() == f)) throw FieldMismatch("divmod across fields");
    if (a.is_zero()) return {LaurentPoly(f), LaurentPoly(f)};
    // a = t^sa * a0, b = t^sb * b0 with a0, b0 ordinary polynomials with nonzero constant terms.
    const std::int64_t sa = a.min_exponent();
    const std::int64_t sb = b.min_exponent();
    Coeffs a0, b0;
    for (std::int64_t e = sa; e <= a.max_exponent(); ++e) a0.push_back(a.coefficient(e));
    for (std::int64_t e = sb; e <= b.max_exponent(); ++e) b0.push_back(b.coefficient(e));
    auto [q0, r0] = poly_divmod(a0, b0, f);
    LaurentPoly q = q0.empty() ? LaurentPoly(f) : LaurentPoly::from_coefficients(sa - sb, std::move(q0));
    LaurentPoly r = r0.empty() ? LaurentPoly(f) : LaurentPoly::from_coefficients(sa, std::move(r0));
    return {std::move(q), std::move(r)};
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    return divmod(a, b).second.is_zero();
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError(b.to_string() + " does not divide " + a.to_string());
    return q;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    LaurentPoly x = a.normalized();
    LaurentPoly y = b.normalized();
    while (!y.is_zero()) {
        LaurentPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.normalized();
    }
    return x.normalized();
}

std::uint64_t laurent_degree(const LaurentPoly& p) {
    return p.degree();
}

std::uint64_t euler_totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

LaurentPoly cyclotomic(std::uint64_t k, Field field) {
    if (k == 0) throw DomainError("cyclotomic polynomials are indexed from 1");
    if (!field.is_rational()) throw Unsupported("cyclotomic analysis is characteristic-0 only");
    thread_local std::map<std::uint64_t, LaurentPoly> cache;
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    LaurentPoly acc = LaurentPoly::t_power_minus_one(field, static_cast<std::int64_t>(k));
    for (std::uint64_t j = 1; j < k; ++j) {
        if (k % j == 0) acc = exact_quotient(acc, cyclotomic(j, field));
    }
    acc = acc.normalized();
    cache.emplace(k, acc);
    return acc;
}

std::set<std::uint64_t> cyclotomic_orders(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("cyclotomic orders of the zero polynomial are undefined");
    if (!p.field().is_rational()) throw Unsupported("cyclotomic analysis is characteristic-0 only");
    std::set<std::uint64_t> orders;
    const std::uint64_t deg = p.degree();
    // totient(k) >= sqrt(k/2), so totient(k) <= deg forces k <= 2*deg^2.
    const std::uint64_t bound = 2 * deg * deg;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (euler_totient(k) > deg) continue;
        if (divides(cyclotomic(k), p)) orders.insert(k);
    }
    return orders;
}

} // namespace cyclocover
