#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclocover::mv {

/// Half-open interval [lo, hi) on the doubled degree line x = 2k.
/// kNegInf / kPosInf stand for the unbounded ends.
struct Band {
    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
    static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max() / 4;

    std::int64_t lo = kNegInf;
    std::int64_t hi = kPosInf;

    friend bool operator==(const Band&, const Band&) = default;
};

/// Set of integer degrees k, stored as disjoint bands on 2k so that
/// predicates like k > n/2 stay exact for odd n. Bands are kept canonical
/// (even endpoints, sorted, merged), so equal sets compare equal.
class DegreeSet {
public:
    DegreeSet() = default;  // empty

    static DegreeSet all();
    static DegreeSet from_bands(std::vector<Band> bands);
    static DegreeSet of(std::initializer_list<std::int64_t> degrees);
    /// {k : 2k < n}, {k : 2k > n}, {k : 2k != n}.
    static DegreeSet below_half(std::int64_t n);
    static DegreeSet above_half(std::int64_t n);
    static DegreeSet except_half(std::int64_t n);
    /// {k : k < lo or k > hi}.
    static DegreeSet outside(std::int64_t lo, std::int64_t hi);

    const std::vector<Band>& bands() const { return bands_; }
    bool empty() const { return bands_.empty(); }
    bool contains(std::int64_t k) const;
    bool includes(const DegreeSet& other) const;

    DegreeSet unite(const DegreeSet& o) const;
    DegreeSet intersect(const DegreeSet& o) const;
    DegreeSet complement() const;
    /// {k + s : k in this}.
    DegreeSet shifted(std::int64_t s) const;
    /// {n - k : k in this}.
    DegreeSet reflected(std::int64_t n) const;

    std::vector<std::int64_t> members_between(std::int64_t lo, std::int64_t hi) const;
    /// e.g. "k <= 1 or k >= 3"; "none" and "all k" for the extremes.
    std::string describe() const;

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

private:
    void canonicalize();
    std::vector<Band> bands_;
};

struct Space {
    std::string name;
    std::optional<std::int64_t> dimension;
    bool closed_oriented = false;
};

/// whole = first U_interface second, pi_1-injective (user asserted).
struct Splitting {
    std::string whole;
    std::string first;
    std::string second;
    std::string interface;
};

/// Relative homology of (total, sub), tracked as its own pseudo-space `name`.
struct Pair {
    std::string name;
    std::string total;
    std::string sub;
};

/// Codimension-two tube around `core` in a pair: H_i(pair) ~ H_{i-2}(core).
struct Tube {
    std::string pair;
    std::string core;
};

/// Regular p-power cover `cover` -> `base`: b(cover) <= p^r b(base).
struct PowerCover {
    std::string cover;
    std::string base;
};

enum class Rule {
    axiom,
    dimension_bound,
    piece_vanishing,
    glue_vanishing,
    duality,
    tube,
    pair_sub,
    pair_total,
    pair_relative,
    cover_monotone,
};

const char* rule_name(Rule r);

struct Fact {
    std::size_t id = 0;
    std::string space;
    DegreeSet degrees;
    Rule rule = Rule::axiom;
    std::size_t structure = 0;  // index into the splittings/pairs/tubes/covers used by the rule
    std::vector<std::size_t> premises;
    std::string note;
};

/// Saturating inference engine over vanishing facts b_k(space) = 0.
class Propagator {
public:
    void add_space(Space s);
    bool has_space(const std::string& name) const;
    const Space& space(const std::string& name) const;

    std::size_t assert_vanishing(const std::string& space, const DegreeSet& degrees, std::string note = "axiom");

    std::size_t add_splitting(Splitting s);
    /// Also registers the pair's pseudo-space (dimension of the total space).
    std::size_t add_pair(Pair p);
    std::size_t add_tube(Tube t);
    std::size_t add_cover(PowerCover c);

    const std::vector<Splitting>& splittings() const { return splittings_; }
    const std::vector<Pair>& pairs() const { return pairs_; }

    // Single rule applications; each returns the ids of facts that added new degrees.
    std::vector<std::size_t> apply_piece_vanishing(std::size_t splitting);
    std::vector<std::size_t> apply_glue_vanishing(std::size_t splitting);
    /// Throws InputError when the space has no dimension or is not closed and oriented.
    std::vector<std::size_t> apply_duality(const std::string& space);
    std::vector<std::size_t> apply_tube(std::size_t tube);
    std::vector<std::size_t> apply_pair_les(std::size_t pair);
    std::vector<std::size_t> apply_cover_monotone(std::size_t cover);

    /// Applies all rules until nothing new appears. Order: rule kind, then structure insertion order.
    void saturate(std::size_t max_rounds = 10000);

    DegreeSet vanishing(const std::string& space) const;
    const std::vector<Fact>& facts() const { return facts_; }
    const std::vector<Space>& spaces() const { return spaces_; }

    /// Re-derives every non-axiom fact from its recorded premises. Returns an
    /// empty string on success, otherwise a description of the first failure.
    std::string replay() const;

    /// Human-readable proof listing.
    std::string proof_listing() const;

private:
    DegreeSet aggregate(const std::string& space, const std::vector<std::size_t>& premises) const;
    std::vector<std::size_t> premise_ids(std::initializer_list<std::string> spaces) const;
    std::optional<std::size_t> record(const std::string& space, const DegreeSet& derived, Rule rule,
                                      std::size_t structure, std::vector<std::size_t> premises, std::string note);
    DegreeSet recompute(const Fact& f) const;
    const Space* find(const std::string& name) const;

    std::vector<Space> spaces_;
    std::vector<Fact> facts_;
    std::map<std::string, std::vector<std::size_t>> by_space_;
    std::vector<Splitting> splittings_;
    std::vector<Pair> pairs_;
    std::vector<Tube> tubes_;
    std::vector<PowerCover> covers_;
};

/// Binary gluing tree; leaves have no children.
struct GluingNode {
    std::string name;
    std::string interface;  // empty for leaves
    std::vector<GluingNode> children;
};

/// Tree of the d-fold branched cover hat M = M+ U_V1 M_d with M_1 = M-,
/// M_{i+1} = (M_i U_{V1+} M+) U_{V1-} M-. Throws InputError when d == 0.
GluingNode gt_decomposition(std::size_t d);
std::size_t count_leaves(const GluingNode& node, const std::string& name);

struct Axiom {
    std::string space;
    std::int64_t dimension = 0;
    DegreeSet vanishing;
};

/// Singer-type axioms b_k = 0 for 2k != dim on M (n), V1 (n-1), V (n-2).
std::vector<Axiom> singer_axioms(std::int64_t n);

struct DerivationTrace {
    Propagator engine;
    std::string target;
    std::int64_t dimension = 0;
    std::vector<std::int64_t> vanishing_degrees;  // within [0, dimension]
};

/// Runs the Mayer-Vietoris argument for the d-fold branched cover. Axioms must
/// cover M, V1 and V (InputError otherwise).
DerivationTrace derive_singer(std::int64_t n, std::size_t d, const std::vector<Axiom>& axioms);
DerivationTrace derive_singer(std::int64_t n, std::size_t d);

/// Excision, pair sequences, p-power monotonicity and duality for the
/// complement M0 = M - tube(V) and a p^r-fold branched cover hat M.
DerivationTrace derive_prime_power_branched(std::int64_t n);

} // namespace cyclocover::mv
