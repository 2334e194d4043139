#include "cyclocover/presentation.hpp"

#include "cyclocover/errors.hpp"

#include <cctype>
#include <numeric>

namespace cyclocover {

GroupWord GroupWord::reduced() const {
    std::vector<Letter> out;
    for (const Letter& l : letters_) {
        if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return GroupWord(std::move(out));
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exponent = -l.exponent;
    return GroupWord(std::move(out));
}

GroupWord GroupWord::prefix(std::size_t n) const {
    return GroupWord(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(std::move(all)).reduced();
}

GroupWord parse_word(std::string_view text, std::string_view names) {
    std::vector<Letter> letters;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        const auto pos = names.find(lower);
        if (pos == std::string_view::npos || !std::isalpha(static_cast<unsigned char>(ch))) {
            throw InputError("unknown generator '" + std::string(1, ch) + "' in relator '" + std::string(text) + "'");
        }
        letters.push_back(Letter{pos, std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1});
    }
    return GroupWord(std::move(letters));
}

FreeGroupRingElem FreeGroupRingElem::of(const GroupWord& w, long coefficient) {
    FreeGroupRingElem e;
    e.add_term(w.reduced(), mpz_class(coefficient));
    return e;
}

void FreeGroupRingElem::add_term(const GroupWord& w, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FreeGroupRingElem& FreeGroupRingElem::operator+=(const FreeGroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeGroupRingElem& FreeGroupRingElem::operator-=(const FreeGroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeGroupRingElem operator*(const FreeGroupRingElem& a, const FreeGroupRingElem& b) {
    FreeGroupRingElem r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    }
    return r;
}

FreeGroupRingElem fox_derivative(const GroupWord& w, std::size_t g) {
    FreeGroupRingElem result;
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i].generator != g) continue;
        const GroupWord before = w.prefix(i);
        if (letters[i].exponent > 0) {
            result += FreeGroupRingElem::of(before);
        } else {
            result -= FreeGroupRingElem::of(before * GroupWord::generator(g, -1));
        }
    }
    return result;
}

Presentation Presentation::make(Field field, std::string_view names, const std::vector<std::string>& relators,
                                std::vector<long long> phi) {
    Presentation p;
    p.field = field;
    p.generator_names = std::string(names);
    for (const auto& r : relators) p.relators.push_back(parse_word(r, names));
    p.phi = std::move(phi);
    p.psi.assign(p.generator_names.size(), FieldElem::one(field));
    return p;
}

void Presentation::validate() const {
    const std::size_t n = generator_count();
    if (n == 0) throw InputError("a presentation needs at least one generator");
    for (std::size_t i = 0; i < n; ++i) {
        const char c = generator_names[i];
        if (!std::islower(static_cast<unsigned char>(c))) throw InputError("generator names must be lowercase letters");
        if (generator_names.find(c) != i) throw InputError(std::string("duplicate generator '") + c + "'");
    }
    if (phi.size() != n) throw InputError("phi needs one integer per generator");
    if (psi.size() != n) throw InputError("psi needs one value per generator");
    long long g = 0;
    for (long long v : phi) g = std::gcd(g, v);
    if (g != 1) throw InputError("phi is not surjective onto Z (gcd of its values is " + std::to_string(g) + ")");
    for (const auto& x : psi) {
        if (!(x.field() == field)) throw FieldMismatch("psi value over " + x.field().to_string());
        if (x.is_zero()) throw InputError("psi values must be nonzero");
    }
    for (std::size_t r = 0; r < relators.size(); ++r) {
        long long weight = 0;
        FieldElem product = FieldElem::one(field);
        for (const Letter& l : relators[r].letters()) {
            if (l.generator >= n) throw InputError("relator uses generator index out of range");
            weight += l.exponent * phi[l.generator];
            product *= psi[l.generator].pow(l.exponent);
        }
        if (weight != 0) {
            throw InputError("relator " + std::to_string(r) + " has phi-weight " + std::to_string(weight) + " != 0");
        }
        if (!product.is_one()) throw InputError("relator " + std::to_string(r) + " has psi-product " + product.to_string() + " != 1");
    }
}

LaurentPoly specialize(const FreeGroupRingElem& x, const Presentation& p) {
    LaurentPoly out(p.field);
    for (const auto& [w, c] : x.terms()) {
        std::int64_t e = 0;
        FieldElem coeff = FieldElem::from_rational(p.field, mpq_class(c));
        for (const Letter& l : w.letters()) {
            e += l.exponent * p.phi[l.generator];
            coeff *= p.psi[l.generator].pow(l.exponent);
        }
        out += LaurentPoly::monomial(coeff, e);
    }
    return out;
}

ChainComplexOverR presentation_to_complex(const Presentation& p) {
    p.validate();
    const Field f = p.field;
    const std::size_t n = p.generator_count();
    RMatrix d1(f, 1, n);
    for (std::size_t g = 0; g < n; ++g) {
        d1(0, g) = LaurentPoly::monomial(p.psi[g], p.phi[g]) - LaurentPoly::one(f);
    }
    if (p.relators.empty()) return ChainComplexOverR(f, {1, n}, {d1});
    RMatrix d2(f, n, p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (std::size_t g = 0; g < n; ++g) d2(g, r) = specialize(fox_derivative(p.relators[r], g), p);
    }
    return ChainComplexOverR(f, {1, n, p.relators.size()}, {d1, d2});
}

} // namespace cyclocover
