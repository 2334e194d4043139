#pragma once

#include "cyclocover/chain_complex.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cyclocover {

struct Letter {
    std::size_t generator;
    int exponent;  // +1 or -1

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Word in the free group; reduced() cancels adjacent inverse pairs.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static GroupWord generator(std::size_t g, int exponent = 1) { return GroupWord({Letter{g, exponent}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    GroupWord reduced() const;
    GroupWord inverse() const;
    GroupWord prefix(std::size_t n) const;

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Parses "xyxY X Y": lowercase letters are generators, capitals their inverses,
/// whitespace is ignored. `names` lists the generator letters in index order.
GroupWord parse_word(std::string_view text, std::string_view names);

/// Element of the integral group ring of the free group: reduced word -> integer.
class FreeGroupRingElem {
public:
    FreeGroupRingElem() = default;
    static FreeGroupRingElem of(const GroupWord& w, long coefficient = 1);
    static FreeGroupRingElem identity() { return of(GroupWord{}); }

    const std::map<GroupWord, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeGroupRingElem& operator+=(const FreeGroupRingElem& o);
    FreeGroupRingElem& operator-=(const FreeGroupRingElem& o);
    friend FreeGroupRingElem operator+(FreeGroupRingElem a, const FreeGroupRingElem& b) { return a += b; }
    friend FreeGroupRingElem operator-(FreeGroupRingElem a, const FreeGroupRingElem& b) { return a -= b; }
    friend FreeGroupRingElem operator*(const FreeGroupRingElem& a, const FreeGroupRingElem& b);
    friend bool operator==(const FreeGroupRingElem&, const FreeGroupRingElem&) = default;

private:
    void add_term(const GroupWord& w, const mpz_class& c);
    std::map<GroupWord, mpz_class> terms_;
};

/// Fox derivative d(w)/d(x_g) in the free group ring, from
/// d(x)/dx = 1, d(x^-1)/dx = -x^-1, d(uv)/dx = du/dx + u dv/dx.
FreeGroupRingElem fox_derivative(const GroupWord& w, std::size_t g);

/// Group presentation with the twisting data phi : G -> Z and a character psi : G -> F^*.
struct Presentation {
    Field field = Field::rationals();
    std::string generator_names;  // one letter per generator
    std::vector<GroupWord> relators;
    std::vector<long long> phi;
    std::vector<FieldElem> psi;

    std::size_t generator_count() const { return generator_names.size(); }

    /// Trivial psi; names are single lowercase letters.
    static Presentation make(Field field, std::string_view names, const std::vector<std::string>& relators,
                             std::vector<long long> phi);

    /// Throws InputError when phi is not surjective or a relator is not killed by phi or psi.
    void validate() const;
};

/// Image of a group ring element under g -> psi(g) t^phi(g).
LaurentPoly specialize(const FreeGroupRingElem& x, const Presentation& p);

/// Cellular chain complex of the presentation 2-complex: one 0-cell, a 1-cell
/// per generator, a 2-cell per relator. d_1 column g is psi(x_g) t^phi(x_g) - 1,
/// d_2 entry (g, r) is the specialized Fox derivative of relator r in x_g.
ChainComplexOverR presentation_to_complex(const Presentation& p);

} // namespace cyclocover
