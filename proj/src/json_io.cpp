#include "cyclocover/json_io.hpp"

#include "cyclocover/builtins.hpp"
#include "cyclocover/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace cyclocover::io {

namespace {

json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError("expected an integer, got " + j.dump());
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t size_from_json(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

FieldElem field_elem_from_json(const json& j, Field field) {
    if (j.is_string()) return FieldElem::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return FieldElem::from_int(field, j.get<long long>());
    throw InputError("expected a number or \"a/b\" string, got " + j.dump());
}

std::int64_t bound_from_json(const json& j, std::int64_t infinity) {
    if (j.is_null()) return infinity;
    if (!j.is_number_integer()) throw InputError("band ends must be integers or null");
    return j.get<std::int64_t>();
}

json bound_to_json(std::int64_t x) {
    if (x <= mv::Band::kNegInf || x >= mv::Band::kPosInf) return nullptr;
    return x;
}

} // namespace

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        if (p.field().is_rational()) {
            out.push_back(json::array({e, integer_to_json(c.rational().get_num()), integer_to_json(c.rational().get_den())}));
        } else {
            out.push_back(json::array({e, c.residue(), 1}));
        }
    }
    return out;
}

LaurentPoly laurent_from_json(const json& j, Field field) {
    if (!j.is_array()) throw InputError("a Laurent polynomial is an array of [exponent, numerator, denominator]");
    LaurentPoly p(field);
    std::optional<std::int64_t> last;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer()) {
            throw InputError("malformed polynomial term " + term.dump());
        }
        const auto e = term[0].get<std::int64_t>();
        if (last && e <= *last) throw InputError("polynomial exponents must be strictly ascending");
        last = e;
        const mpz_class num = integer_from_json(term[1]);
        const mpz_class den = integer_from_json(term[2]);
        if (den == 0) throw InputError("zero denominator in polynomial term");
        const FieldElem c = FieldElem::from_rational(field, mpq_class(num, den));
        if (c.is_zero()) throw InputError("polynomial terms must have nonzero coefficients");
        p += LaurentPoly::monomial(c, e);
    }
    return p;
}

json to_json(const RMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(to_json(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RMatrix rmatrix_from_json(const json& j, Field field) {
    const std::size_t rows = size_from_json(require(j, "rows"), "rows");
    const std::size_t cols = size_from_json(require(j, "cols"), "cols");
    const json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
        throw InputError("matrix needs rows*cols = " + std::to_string(rows * cols) + " entries");
    }
    RMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = laurent_from_json(entries[i * cols + k], field);
    }
    return m;
}

json to_json(const ChainComplexOverR& c) {
    json b = json::array();
    for (const auto& m : c.boundaries()) b.push_back(to_json(m));
    return json{{"field", c.field().to_string()}, {"dims", c.dims()}, {"boundaries", b}};
}

ChainComplexOverR complex_from_json(const json& j) {
    const json& fj = require(j, "field");
    if (!fj.is_string()) throw InputError("field must be a string");
    const Field field = Field::parse(fj.get<std::string>());
    const json& dj = require(j, "dims");
    if (!dj.is_array()) throw InputError("dims must be an array");
    std::vector<std::size_t> dims;
    for (const auto& x : dj) dims.push_back(size_from_json(x, "dims entries"));
    const json& bj = require(j, "boundaries");
    if (!bj.is_array()) throw InputError("boundaries must be an array");
    std::vector<RMatrix> boundaries;
    for (const auto& m : bj) boundaries.push_back(rmatrix_from_json(m, field));
    return ChainComplexOverR(field, std::move(dims), std::move(boundaries));
}

Presentation presentation_from_json(const json& j, std::optional<Field> field) {
    Field f = Field::rationals();
    if (j.contains("field")) {
        if (!j.at("field").is_string()) throw InputError("field must be a string");
        f = Field::parse(j.at("field").get<std::string>());
    }
    if (field) f = *field;

    std::string names;
    const json& gj = require(j, "generators");
    if (gj.is_number_integer()) {
        const auto n = size_from_json(gj, "generators");
        static const std::string pool = "xyzwuvabcdefghijklmnopqrst";
        if (n == 0 || n > pool.size()) throw InputError("generator count must be between 1 and 26");
        names = pool.substr(0, n);
    } else if (gj.is_array()) {
        for (const auto& g : gj) {
            if (!g.is_string() || g.get<std::string>().size() != 1) throw InputError("generator names are single letters");
            names += g.get<std::string>();
        }
    } else {
        throw InputError("generators must be a count or a list of letters");
    }

    std::vector<std::string> relators;
    if (j.contains("relators")) {
        for (const auto& r : j.at("relators")) {
            if (!r.is_string()) throw InputError("relators must be strings");
            relators.push_back(r.get<std::string>());
        }
    }
    std::vector<long long> phi;
    for (const auto& v : require(j, "phi")) {
        if (!v.is_number_integer()) throw InputError("phi values must be integers");
        phi.push_back(v.get<long long>());
    }
    Presentation p = Presentation::make(f, names, relators, std::move(phi));
    if (j.contains("psi")) {
        p.psi.clear();
        for (const auto& v : j.at("psi")) p.psi.push_back(field_elem_from_json(v, f));
    }
    p.validate();
    return p;
}

json to_json(const ModuleDecomposition& d) {
    json divs = json::array();
    for (const auto& p : d.divisors) divs.push_back(to_json(p));
    return json{{"free_rank", d.free_rank}, {"divisors", divs}};
}

ModuleDecomposition decomposition_from_json(const json& j, Field field) {
    ModuleDecomposition d;
    d.free_rank = size_from_json(require(j, "free_rank"), "free_rank");
    for (const auto& p : require(j, "divisors")) d.divisors.push_back(laurent_from_json(p, field));
    return d;
}

json to_json(const CoverBettiReport& r) {
    json out{{"d", r.d}};
    out["betti_formula"] = r.betti_formula ? json(*r.betti_formula) : json(nullptr);
    out["betti_oracle"] = r.betti_oracle ? json(*r.betti_oracle) : json(nullptr);
    json contributions = json::array();
    for (std::size_t k = 0; k < r.contributions.size(); ++k) {
        const auto& c = r.contributions[k];
        contributions.push_back(json{{"degree", k},
                                     {"free_term", c.free_term},
                                     {"coker_terms", c.coker_terms},
                                     {"ker_terms", c.ker_terms}});
    }
    out["contributions"] = contributions;
    return out;
}

json to_json(const VanishingCertificate& c) {
    auto checks = [](const std::vector<CoverCheck>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(json{{"d", x.d}, {"cover_betti", x.cover_betti}, {"equivalent", x.equivalent}});
        return a;
    };
    return json{{"k", c.k},
                {"base_vanishes", c.base_vanishes},
                {"base_betti", c.base_betti},
                {"modulus", c.modulus.modulus},
                {"orders", {{"k_level", c.modulus.k_level}, {"km1_level", c.modulus.km1_level}}},
                {"verified", checks(c.verified)},
                {"witnesses", checks(c.witnesses)}};
}

json to_json(const PPowerReport& r) {
    return json{{"p", r.p},
                {"r", r.r},
                {"k", r.k},
                {"cover_degree", r.cover_degree},
                {"base_dim", r.base_dim},
                {"cover_dim", r.cover_dim},
                {"equivalent", r.equivalent}};
}

json to_json(const mv::DegreeSet& s) {
    json out = json::array();
    for (const auto& b : s.bands()) out.push_back(json::array({bound_to_json(b.lo), bound_to_json(b.hi)}));
    return out;
}

mv::DegreeSet degree_set_from_json(const json& j) {
    if (!j.is_array()) throw InputError("vanishing bands must be an array of [lo2, hi2]");
    std::vector<mv::Band> bands;
    for (const auto& b : j) {
        if (!b.is_array() || b.size() != 2) throw InputError("malformed band " + b.dump());
        bands.push_back(mv::Band{bound_from_json(b[0], mv::Band::kNegInf), bound_from_json(b[1], mv::Band::kPosInf)});
    }
    return mv::DegreeSet::from_bands(std::move(bands));
}

std::vector<mv::Axiom> axioms_from_json(const json& j) {
    const json& list = j.is_object() ? require(j, "axioms") : j;
    if (!list.is_array()) throw InputError("axioms must be a list");
    std::vector<mv::Axiom> out;
    for (const auto& a : list) {
        mv::Axiom ax;
        const json& name = require(a, "space");
        if (!name.is_string()) throw InputError("axiom space must be a string");
        ax.space = name.get<std::string>();
        const json& dim = require(a, "dimension");
        if (!dim.is_number_integer()) throw InputError("axiom dimension must be an integer");
        ax.dimension = dim.get<std::int64_t>();
        const json& v = require(a, "vanishing");
        if (v.is_string()) {
            if (v.get<std::string>() != "singer") throw InputError("unknown vanishing shorthand " + v.dump());
            ax.vanishing = mv::DegreeSet::except_half(ax.dimension);
        } else {
            ax.vanishing = degree_set_from_json(v);
        }
        out.push_back(std::move(ax));
    }
    return out;
}

json to_json(const mv::DerivationTrace& t) {
    const auto& e = t.engine;
    json spaces = json::array();
    for (const auto& s : e.spaces()) {
        spaces.push_back(json{{"name", s.name},
                              {"dimension", s.dimension ? json(*s.dimension) : json(nullptr)},
                              {"closed_oriented", s.closed_oriented}});
    }
    json facts = json::array();
    for (const auto& f : e.facts()) {
        facts.push_back(json{{"id", f.id},
                             {"space", f.space},
                             {"bands", to_json(f.degrees)},
                             {"degrees", f.degrees.describe()},
                             {"rule", mv::rule_name(f.rule)},
                             {"premises", f.premises},
                             {"note", f.note}});
    }
    return json{{"target", t.target},
                {"dimension", t.dimension},
                {"vanishing_degrees", t.vanishing_degrees},
                {"spaces", spaces},
                {"facts", facts}};
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

ChainComplexOverR load_complex(const std::string& input, std::optional<Field> field) {
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), input) != names.end()) {
        return builtin_complex(input, field.value_or(Field::rationals()));
    }
    if (!std::filesystem::exists(input)) {
        throw InputError("input '" + input + "' is neither a builtin nor a readable file");
    }
    std::ifstream in(input);
    std::stringstream buf;
    buf << in.rdbuf();
    const json doc = parse_document(buf.str());
    if (doc.is_object() && doc.contains("relators")) return presentation_to_complex(presentation_from_json(doc, field));
    if (doc.is_object() && doc.contains("generators")) return presentation_to_complex(presentation_from_json(doc, field));
    ChainComplexOverR c = complex_from_json(doc);
    if (field && !(*field == c.field())) {
        throw InputError("--field " + field->to_string() + " disagrees with the document field " + c.field().to_string());
    }
    return c;
}

} // namespace cyclocover::io
