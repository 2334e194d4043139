#include "cyclocover/mv_propagator.hpp"

#include "cyclocover/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cyclocover::mv {

namespace {

bool is_neg_inf(std::int64_t x) { return x <= Band::kNegInf; }
bool is_pos_inf(std::int64_t x) { return x >= Band::kPosInf; }

std::int64_t ceil_even(std::int64_t x) {
    if (is_neg_inf(x) || is_pos_inf(x)) return x;
    return (x & 1) ? x + 1 : x;
}

std::int64_t add_finite(std::int64_t x, std::int64_t s) {
    if (is_neg_inf(x) || is_pos_inf(x)) return x;
    return x + s;
}

} // namespace

// ---------------------------------------------------------------- DegreeSet

void DegreeSet::canonicalize() {
    std::vector<Band> kept;
    for (Band b : bands_) {
        b.lo = is_neg_inf(b.lo) ? Band::kNegInf : ceil_even(b.lo);
        b.hi = is_pos_inf(b.hi) ? Band::kPosInf : ceil_even(b.hi);
        if (b.lo < b.hi) kept.push_back(b);
    }
    std::sort(kept.begin(), kept.end(), [](const Band& a, const Band& b) { return a.lo < b.lo; });
    bands_.clear();
    for (const Band& b : kept) {
        if (!bands_.empty() && b.lo <= bands_.back().hi) {
            bands_.back().hi = std::max(bands_.back().hi, b.hi);
        } else {
            bands_.push_back(b);
        }
    }
}

DegreeSet DegreeSet::all() {
    return from_bands({Band{}});
}

DegreeSet DegreeSet::from_bands(std::vector<Band> bands) {
    DegreeSet s;
    s.bands_ = std::move(bands);
    s.canonicalize();
    return s;
}

DegreeSet DegreeSet::of(std::initializer_list<std::int64_t> degrees) {
    std::vector<Band> bands;
    for (std::int64_t k : degrees) bands.push_back(Band{2 * k, 2 * k + 2});
    return from_bands(std::move(bands));
}

DegreeSet DegreeSet::below_half(std::int64_t n) {
    return from_bands({Band{Band::kNegInf, n}});
}

DegreeSet DegreeSet::above_half(std::int64_t n) {
    return from_bands({Band{n + 1, Band::kPosInf}});
}

DegreeSet DegreeSet::except_half(std::int64_t n) {
    return below_half(n).unite(above_half(n));
}

DegreeSet DegreeSet::outside(std::int64_t lo, std::int64_t hi) {
    return from_bands({Band{Band::kNegInf, 2 * lo}, Band{2 * hi + 2, Band::kPosInf}});
}

bool DegreeSet::contains(std::int64_t k) const {
    const std::int64_t x = 2 * k;
    return std::any_of(bands_.begin(), bands_.end(), [x](const Band& b) { return b.lo <= x && x < b.hi; });
}

bool DegreeSet::includes(const DegreeSet& other) const {
    return other.intersect(complement()).empty();
}

DegreeSet DegreeSet::unite(const DegreeSet& o) const {
    std::vector<Band> all = bands_;
    all.insert(all.end(), o.bands_.begin(), o.bands_.end());
    return from_bands(std::move(all));
}

DegreeSet DegreeSet::intersect(const DegreeSet& o) const {
    std::vector<Band> out;
    for (const Band& a : bands_) {
        for (const Band& b : o.bands_) {
            Band c{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
            if (c.lo < c.hi) out.push_back(c);
        }
    }
    return from_bands(std::move(out));
}

DegreeSet DegreeSet::complement() const {
    std::vector<Band> out;
    std::int64_t cursor = Band::kNegInf;
    for (const Band& b : bands_) {
        if (cursor < b.lo) out.push_back(Band{cursor, b.lo});
        cursor = b.hi;
    }
    if (!is_pos_inf(cursor)) out.push_back(Band{cursor, Band::kPosInf});
    return from_bands(std::move(out));
}

DegreeSet DegreeSet::shifted(std::int64_t s) const {
    std::vector<Band> out;
    for (const Band& b : bands_) out.push_back(Band{add_finite(b.lo, 2 * s), add_finite(b.hi, 2 * s)});
    return from_bands(std::move(out));
}

DegreeSet DegreeSet::reflected(std::int64_t n) const {
    // Even points of [a, b) map under x -> 2n - x onto the even points of [2n - b + 2, 2n - a + 2).
    std::vector<Band> out;
    for (const Band& b : bands_) {
        const std::int64_t lo = is_pos_inf(b.hi) ? Band::kNegInf : 2 * n - b.hi + 2;
        const std::int64_t hi = is_neg_inf(b.lo) ? Band::kPosInf : 2 * n - b.lo + 2;
        out.push_back(Band{lo, hi});
    }
    return from_bands(std::move(out));
}

std::vector<std::int64_t> DegreeSet::members_between(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k <= hi; ++k) {
        if (contains(k)) out.push_back(k);
    }
    return out;
}

std::string DegreeSet::describe() const {
    if (bands_.empty()) return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < bands_.size(); ++i) {
        if (i) os << " or ";
        const Band& b = bands_[i];
        const bool lo_inf = is_neg_inf(b.lo), hi_inf = is_pos_inf(b.hi);
        if (lo_inf && hi_inf) {
            os << "all k";
        } else if (lo_inf) {
            os << "k <= " << b.hi / 2 - 1;
        } else if (hi_inf) {
            os << "k >= " << b.lo / 2;
        } else if (b.lo / 2 == b.hi / 2 - 1) {
            os << "k = " << b.lo / 2;
        } else {
            os << b.lo / 2 << " <= k <= " << b.hi / 2 - 1;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Propagator

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::axiom: return "axiom";
        case Rule::dimension_bound: return "dimension bound";
        case Rule::piece_vanishing: return "Mayer-Vietoris piece";
        case Rule::glue_vanishing: return "Mayer-Vietoris glue";
        case Rule::duality: return "Poincare duality";
        case Rule::tube: return "excision around tube";
        case Rule::pair_sub: return "pair sequence (subspace)";
        case Rule::pair_total: return "pair sequence (total space)";
        case Rule::pair_relative: return "pair sequence (relative)";
        case Rule::cover_monotone: return "p-power cover monotonicity";
    }
    return "?";
}

const Space* Propagator::find(const std::string& name) const {
    for (const auto& s : spaces_) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

bool Propagator::has_space(const std::string& name) const {
    return find(name) != nullptr;
}

const Space& Propagator::space(const std::string& name) const {
    const Space* s = find(name);
    if (!s) throw InputError("unknown space '" + name + "'");
    return *s;
}

void Propagator::add_space(Space s) {
    if (s.name.empty()) throw InputError("space names must be nonempty");
    if (has_space(s.name)) throw InputError("duplicate space '" + s.name + "'");
    spaces_.push_back(s);
    by_space_[s.name];
    // Homology vanishes below degree 0 and above the dimension.
    const DegreeSet bound = s.dimension ? DegreeSet::outside(0, *s.dimension) : DegreeSet::below_half(0);
    record(s.name, bound, Rule::dimension_bound, 0, {}, "dimension");
}

std::size_t Propagator::assert_vanishing(const std::string& name, const DegreeSet& degrees, std::string note) {
    space(name);
    Fact f;
    f.id = facts_.size();
    f.space = name;
    f.degrees = degrees;
    f.rule = Rule::axiom;
    f.note = std::move(note);
    facts_.push_back(f);
    by_space_[name].push_back(f.id);
    return f.id;
}

std::size_t Propagator::add_splitting(Splitting s) {
    for (const auto* n : {&s.whole, &s.first, &s.second, &s.interface}) space(*n);
    splittings_.push_back(std::move(s));
    return splittings_.size() - 1;
}

std::size_t Propagator::add_pair(Pair p) {
    const Space& total = space(p.total);
    space(p.sub);
    add_space(Space{p.name, total.dimension, false});
    pairs_.push_back(std::move(p));
    return pairs_.size() - 1;
}

std::size_t Propagator::add_tube(Tube t) {
    bool known = std::any_of(pairs_.begin(), pairs_.end(), [&](const Pair& p) { return p.name == t.pair; });
    if (!known) throw InputError("tube refers to unknown pair '" + t.pair + "'");
    space(t.core);
    tubes_.push_back(std::move(t));
    return tubes_.size() - 1;
}

std::size_t Propagator::add_cover(PowerCover c) {
    space(c.cover);
    space(c.base);
    covers_.push_back(std::move(c));
    return covers_.size() - 1;
}

DegreeSet Propagator::vanishing(const std::string& name) const {
    space(name);
    DegreeSet acc;
    for (std::size_t id : by_space_.at(name)) acc = acc.unite(facts_[id].degrees);
    return acc;
}

DegreeSet Propagator::aggregate(const std::string& name, const std::vector<std::size_t>& premises) const {
    DegreeSet acc;
    for (std::size_t id : premises) {
        if (facts_[id].space == name) acc = acc.unite(facts_[id].degrees);
    }
    return acc;
}

std::vector<std::size_t> Propagator::premise_ids(std::initializer_list<std::string> names) const {
    std::vector<std::size_t> ids;
    for (const auto& n : names) {
        const auto& v = by_space_.at(n);
        ids.insert(ids.end(), v.begin(), v.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::optional<std::size_t> Propagator::record(const std::string& name, const DegreeSet& derived, Rule rule,
                                              std::size_t structure, std::vector<std::size_t> premises,
                                              std::string note) {
    if (derived.empty()) return std::nullopt;
    if (rule != Rule::dimension_bound && vanishing(name).includes(derived)) return std::nullopt;
    Fact f;
    f.id = facts_.size();
    f.space = name;
    f.degrees = derived;
    f.rule = rule;
    f.structure = structure;
    f.premises = std::move(premises);
    f.note = std::move(note);
    facts_.push_back(f);
    by_space_[name].push_back(f.id);
    return f.id;
}

namespace {

void push(std::vector<std::size_t>& out, std::optional<std::size_t> id) {
    if (id) out.push_back(*id);
}

std::string splitting_text(const Splitting& s) {
    return s.whole + " = " + s.first + " U_" + s.interface + " " + s.second;
}

} // namespace

// b_k(Z) = 0 and b_k(X1 U_Z X2) = 0 imply b_k(Xi) = 0.
std::vector<std::size_t> Propagator::apply_piece_vanishing(std::size_t idx) {
    const Splitting& s = splittings_.at(idx);
    const auto premises = premise_ids({s.whole, s.interface});
    const DegreeSet derived = aggregate(s.whole, premises).intersect(aggregate(s.interface, premises));
    std::vector<std::size_t> out;
    push(out, record(s.first, derived, Rule::piece_vanishing, idx, premises, splitting_text(s)));
    push(out, record(s.second, derived, Rule::piece_vanishing, idx, premises, splitting_text(s)));
    return out;
}

// b_k(X1) = b_k(X2) = 0 and b_{k-1}(Z) = 0 imply b_k(X1 U_Z X2) = 0.
std::vector<std::size_t> Propagator::apply_glue_vanishing(std::size_t idx) {
    const Splitting& s = splittings_.at(idx);
    const auto premises = premise_ids({s.first, s.second, s.interface});
    const DegreeSet derived = aggregate(s.first, premises)
                                  .intersect(aggregate(s.second, premises))
                                  .intersect(aggregate(s.interface, premises).shifted(1));
    std::vector<std::size_t> out;
    push(out, record(s.whole, derived, Rule::glue_vanishing, idx, premises, splitting_text(s)));
    return out;
}

std::vector<std::size_t> Propagator::apply_duality(const std::string& name) {
    const Space& s = space(name);
    if (!s.dimension) throw InputError("duality needs the dimension of '" + name + "'");
    if (!s.closed_oriented) throw InputError("duality needs '" + name + "' to be closed and oriented");
    const auto premises = premise_ids({name});
    const DegreeSet derived = aggregate(name, premises).reflected(*s.dimension);
    std::vector<std::size_t> out;
    push(out, record(name, derived, Rule::duality, 0, premises, "dimension " + std::to_string(*s.dimension)));
    return out;
}

// H_i(pair) ~ H_{i-2}(core).
std::vector<std::size_t> Propagator::apply_tube(std::size_t idx) {
    const Tube& t = tubes_.at(idx);
    const auto premises = premise_ids({t.core});
    const DegreeSet derived = aggregate(t.core, premises).shifted(2);
    std::vector<std::size_t> out;
    push(out, record(t.pair, derived, Rule::tube, idx, premises, "tube around " + t.core));
    return out;
}

// ... -> H_{k+1}(X, A) -> H_k(A) -> H_k(X) -> H_k(X, A) -> H_{k-1}(A) -> ...
std::vector<std::size_t> Propagator::apply_pair_les(std::size_t idx) {
    const Pair& p = pairs_.at(idx);
    std::vector<std::size_t> out;
    {
        const auto premises = premise_ids({p.name, p.total});
        const DegreeSet derived = aggregate(p.name, premises).shifted(-1).intersect(aggregate(p.total, premises));
        push(out, record(p.sub, derived, Rule::pair_sub, idx, premises, p.name));
    }
    {
        const auto premises = premise_ids({p.sub, p.name});
        const DegreeSet derived = aggregate(p.sub, premises).intersect(aggregate(p.name, premises));
        push(out, record(p.total, derived, Rule::pair_total, idx, premises, p.name));
    }
    {
        const auto premises = premise_ids({p.total, p.sub});
        const DegreeSet derived = aggregate(p.total, premises).intersect(aggregate(p.sub, premises).shifted(1));
        push(out, record(p.name, derived, Rule::pair_relative, idx, premises, p.name));
    }
    return out;
}

std::vector<std::size_t> Propagator::apply_cover_monotone(std::size_t idx) {
    const PowerCover& c = covers_.at(idx);
    const auto premises = premise_ids({c.base});
    std::vector<std::size_t> out;
    push(out, record(c.cover, aggregate(c.base, premises), Rule::cover_monotone, idx, premises, c.cover + " -> " + c.base));
    return out;
}

void Propagator::saturate(std::size_t max_rounds) {
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const std::size_t before = facts_.size();
        for (std::size_t i = 0; i < splittings_.size(); ++i) apply_piece_vanishing(i);
        for (std::size_t i = 0; i < splittings_.size(); ++i) apply_glue_vanishing(i);
        for (const auto& s : spaces_) {
            if (s.closed_oriented && s.dimension) apply_duality(s.name);
        }
        for (std::size_t i = 0; i < tubes_.size(); ++i) apply_tube(i);
        for (std::size_t i = 0; i < pairs_.size(); ++i) apply_pair_les(i);
        for (std::size_t i = 0; i < covers_.size(); ++i) apply_cover_monotone(i);
        if (facts_.size() == before) return;
    }
    throw Error("vanishing propagation did not saturate within " + std::to_string(max_rounds) + " rounds");
}

DegreeSet Propagator::recompute(const Fact& f) const {
    const auto& pr = f.premises;
    switch (f.rule) {
        case Rule::piece_vanishing: {
            const Splitting& s = splittings_.at(f.structure);
            if (f.space != s.first && f.space != s.second) throw Error("piece fact on a non-piece");
            return aggregate(s.whole, pr).intersect(aggregate(s.interface, pr));
        }
        case Rule::glue_vanishing: {
            const Splitting& s = splittings_.at(f.structure);
            if (f.space != s.whole) throw Error("glue fact on the wrong space");
            return aggregate(s.first, pr).intersect(aggregate(s.second, pr)).intersect(aggregate(s.interface, pr).shifted(1));
        }
        case Rule::duality: {
            const Space& s = space(f.space);
            if (!s.dimension || !s.closed_oriented) throw Error("duality on a space without duality");
            return aggregate(f.space, pr).reflected(*s.dimension);
        }
        case Rule::tube: {
            const Tube& t = tubes_.at(f.structure);
            if (f.space != t.pair) throw Error("tube fact on the wrong space");
            return aggregate(t.core, pr).shifted(2);
        }
        case Rule::pair_sub: {
            const Pair& p = pairs_.at(f.structure);
            if (f.space != p.sub) throw Error("pair fact on the wrong space");
            return aggregate(p.name, pr).shifted(-1).intersect(aggregate(p.total, pr));
        }
        case Rule::pair_total: {
            const Pair& p = pairs_.at(f.structure);
            if (f.space != p.total) throw Error("pair fact on the wrong space");
            return aggregate(p.sub, pr).intersect(aggregate(p.name, pr));
        }
        case Rule::pair_relative: {
            const Pair& p = pairs_.at(f.structure);
            if (f.space != p.name) throw Error("pair fact on the wrong space");
            return aggregate(p.total, pr).intersect(aggregate(p.sub, pr).shifted(1));
        }
        case Rule::cover_monotone: {
            const PowerCover& c = covers_.at(f.structure);
            if (f.space != c.cover) throw Error("cover fact on the wrong space");
            return aggregate(c.base, pr);
        }
        case Rule::axiom:
        case Rule::dimension_bound:
            break;
    }
    return f.degrees;
}

std::string Propagator::replay() const {
    for (const Fact& f : facts_) {
        if (f.rule == Rule::axiom) continue;
        if (f.rule == Rule::dimension_bound) {
            const Space& s = space(f.space);
            const DegreeSet expected = s.dimension ? DegreeSet::outside(0, *s.dimension) : DegreeSet::below_half(0);
            if (!(expected == f.degrees)) return "fact " + std::to_string(f.id) + ": wrong dimension bound";
            continue;
        }
        for (std::size_t p : f.premises) {
            if (p >= f.id) return "fact " + std::to_string(f.id) + " cites a later fact " + std::to_string(p);
        }
        try {
            if (!(recompute(f) == f.degrees)) return "fact " + std::to_string(f.id) + " does not follow from its premises";
        } catch (const std::exception& e) {
            return "fact " + std::to_string(f.id) + ": " + e.what();
        }
    }
    return {};
}

std::string Propagator::proof_listing() const {
    std::ostringstream os;
    for (const Fact& f : facts_) {
        os << "[" << f.id << "] b_k(" << f.space << ") = 0 for " << f.degrees.describe() << "    by "
           << rule_name(f.rule);
        if (!f.note.empty() && f.rule != Rule::dimension_bound) os << " (" << f.note << ")";
        if (!f.premises.empty()) {
            os << " from";
            for (std::size_t p : f.premises) os << " " << p;
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- decompositions

GluingNode gt_decomposition(std::size_t d) {
    if (d == 0) throw InputError("branched cover degree must be positive");
    auto leaf = [](const std::string& n) { return GluingNode{n, "", {}}; };
    GluingNode current = leaf("M-");  // M_1
    for (std::size_t i = 1; i < d; ++i) {
        GluingNode half{"M_" + std::to_string(i) + " U M+", "V1+", {current, leaf("M+")}};
        current = GluingNode{"M_" + std::to_string(i + 1), "V1-", {std::move(half), leaf("M-")}};
    }
    return GluingNode{"hatM", "V1", {leaf("M+"), std::move(current)}};
}

std::size_t count_leaves(const GluingNode& node, const std::string& name) {
    if (node.children.empty()) return node.name == name ? 1 : 0;
    std::size_t n = 0;
    for (const auto& c : node.children) n += count_leaves(c, name);
    return n;
}

std::vector<Axiom> singer_axioms(std::int64_t n) {
    return {
        Axiom{"M", n, DegreeSet::except_half(n)},
        Axiom{"V1", n - 1, DegreeSet::except_half(n - 1)},
        Axiom{"V", n - 2, DegreeSet::except_half(n - 2)},
    };
}

namespace {

void register_tree(Propagator& engine, const GluingNode& node, std::int64_t n) {
    if (node.children.empty()) return;
    for (const auto& c : node.children) register_tree(engine, c, n);
    if (!engine.has_space(node.name)) engine.add_space(Space{node.name, n, node.name == "hatM"});
    engine.add_splitting(Splitting{node.name, node.children[0].name, node.children[1].name, node.interface});
}

const Axiom& find_axiom(const std::vector<Axiom>& axioms, const std::string& name) {
    for (const auto& a : axioms) {
        if (a.space == name) return a;
    }
    throw InputError("missing axiom for space '" + name + "'");
}

} // namespace

DerivationTrace derive_singer(std::int64_t n, std::size_t d, const std::vector<Axiom>& axioms) {
    if (n < 2) throw InputError("dimension must be at least 2");
    const Axiom& am = find_axiom(axioms, "M");
    const Axiom& av1 = find_axiom(axioms, "V1");
    const Axiom& av = find_axiom(axioms, "V");
    if (am.dimension != n || av1.dimension != n - 1 || av.dimension != n - 2) {
        throw InputError("axioms must describe M, V1, V in dimensions n, n-1, n-2");
    }
    DerivationTrace trace;
    trace.target = "hatM";
    trace.dimension = n;
    Propagator& e = trace.engine;
    e.add_space(Space{"M", n, true});
    e.add_space(Space{"V1", n - 1, true});
    e.add_space(Space{"V", n - 2, true});
    e.add_space(Space{"M+", n, false});
    e.add_space(Space{"M-", n, false});
    e.add_space(Space{"V1+", n - 1, false});
    e.add_space(Space{"V1-", n - 1, false});
    e.assert_vanishing("M", am.vanishing, "Singer for M");
    e.assert_vanishing("V1", av1.vanishing, "Singer for V1");
    e.assert_vanishing("V", av.vanishing, "Singer for V");
    e.add_splitting(Splitting{"M", "M+", "M-", "V1"});
    e.add_splitting(Splitting{"V1", "V1+", "V1-", "V"});
    register_tree(e, gt_decomposition(d), n);
    e.saturate();
    trace.vanishing_degrees = e.vanishing("hatM").members_between(0, n);
    return trace;
}

DerivationTrace derive_singer(std::int64_t n, std::size_t d) {
    return derive_singer(n, d, singer_axioms(n));
}

DerivationTrace derive_prime_power_branched(std::int64_t n) {
    if (n < 2) throw InputError("dimension must be at least 2");
    DerivationTrace trace;
    trace.target = "hatM";
    trace.dimension = n;
    Propagator& e = trace.engine;
    e.add_space(Space{"M", n, true});
    e.add_space(Space{"V", n - 2, true});
    e.add_space(Space{"M0", n, false});
    e.add_space(Space{"M0'", n, false});
    e.add_space(Space{"hatM", n, true});
    e.assert_vanishing("M", DegreeSet::except_half(n), "closed hyperbolic M");
    e.assert_vanishing("V", DegreeSet::except_half(n - 2), "closed hyperbolic V");
    e.add_pair(Pair{"(M,M0)", "M", "M0"});
    e.add_tube(Tube{"(M,M0)", "V"});
    e.add_cover(PowerCover{"M0'", "M0"});
    e.add_pair(Pair{"(hatM,M0')", "hatM", "M0'"});
    e.add_tube(Tube{"(hatM,M0')", "V"});
    e.saturate();
    trace.vanishing_degrees = e.vanishing("hatM").members_between(0, n);
    return trace;
}

} // namespace cyclocover::mv
