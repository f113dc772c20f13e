#ifndef ACYCLIC_LCL_HPP
#define ACYCLIC_LCL_HPP

// Exact, enumeration-based checks of the local cut lemma on hypercube
// digraphs Q(I) over tiny ground sets. Vertices of Q(I) are subsets of I
// (bitmasks); its edges run from S ∪ {e} to S. Probabilities are exact
// rationals computed by summing integer atom weights over the whole product
// outcome space.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acyclic/coloring.hpp"
#include "acyclic/graph.hpp"

namespace acyclic::lcl {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Subset = std::uint32_t;
using Outcome = std::span<const std::uint32_t>;

inline constexpr std::uint64_t kDefaultOutcomeCap = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxGroundSize = 20;

class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact value of a double (every finite double is a dyadic rational).
inline Rational to_rational(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("to_rational: non-finite value");
    }
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    Rational r = Rational(Integer(scaled));
    exponent -= 53;
    if (exponent > 0) {
        r *= Rational(Integer(1) << exponent);
    } else if (exponent < 0) {
        r /= Rational(Integer(1) << -exponent);
    }
    return r;
}

inline Subset bit(std::size_t i) { return Subset{1} << i; }
inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

/**
 * Independent product distribution: element i takes value v with
 * probability weights[i][v] / sum(weights[i]). Integer weights keep every
 * probability exact.
 */
struct ProductSpace {
    std::vector<std::vector<std::uint64_t>> weights;

    std::size_t ground_size() const { return weights.size(); }

    /// Number of atoms, saturating at the uint64 maximum.
    std::uint64_t atom_count() const {
        std::uint64_t n = 1;
        for (const auto& w : weights) {
            if (w.empty()) {
                return 0;
            }
            if (n > std::numeric_limits<std::uint64_t>::max() / w.size()) {
                return std::numeric_limits<std::uint64_t>::max();
            }
            n *= w.size();
        }
        return n;
    }

    Integer total_weight() const {
        Integer t = 1;
        for (const auto& w : weights) {
            std::uint64_t s = 0;
            for (auto x : w) {
                s += x;
            }
            t *= s;
        }
        return t;
    }

    static ProductSpace uniform(std::size_t ground, std::uint32_t values) {
        return {std::vector<std::vector<std::uint64_t>>(ground, std::vector<std::uint64_t>(values, 1))};
    }
};

/// A constant weight omega on every hypercube edge, or an explicit table.
class WeightAssignment {
public:
    static WeightAssignment constant(Rational omega) {
        if (omega < 1) {
            throw std::invalid_argument("LCL weights must be >= 1");
        }
        WeightAssignment w;
        w.constant_ = std::move(omega);
        return w;
    }

    /// `weight(tail, element)` gives omega(tail, tail \ {element}) for every element of tail.
    static WeightAssignment table(std::size_t ground, const std::function<Rational(Subset, std::size_t)>& weight) {
        if (ground > kMaxGroundSize) {
            throw EnumerationCapExceeded("weight table over more than 20 elements");
        }
        WeightAssignment w;
        w.ground_ = ground;
        w.table_.resize((std::size_t{1} << ground) * ground);
        for (Subset x = 0; x < (Subset{1} << ground); ++x) {
            for (std::size_t i = 0; i < ground; ++i) {
                if (x & bit(i)) {
                    Rational v = weight(x, i);
                    if (v < 1) {
                        throw std::invalid_argument("LCL weights must be >= 1");
                    }
                    w.table_[x * ground + i] = std::move(v);
                }
            }
        }
        return w;
    }

    bool is_constant() const { return constant_.has_value(); }
    const Rational& constant_value() const { return *constant_; }

    /// omega on the hypercube edge (tail, tail \ {element}).
    Rational operator()(Subset tail, std::size_t element) const {
        if (constant_) {
            return *constant_;
        }
        return table_.at(tail * ground_ + element);
    }

private:
    std::optional<Rational> constant_;
    std::size_t ground_ = 0;
    std::vector<Rational> table_;
};

/// Tail-to-head hypercube edge (head ∪ {element}, head).
struct HyperEdge {
    Subset head;
    std::size_t element;
    Subset tail() const { return head | bit(element); }
    friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

enum class CutKind { adjacent_clash, bichromatic_cycle, type1, type2, type3, type4, type5 };

inline std::string_view to_string(CutKind k) {
    switch (k) {
        case CutKind::adjacent_clash: return "f";
        case CutKind::bichromatic_cycle: return "f_C";
        case CutKind::type1: return "type1";
        case CutKind::type2: return "type2";
        case CutKind::type3: return "type3";
        case CutKind::type4: return "type4";
        case CutKind::type5: return "type5";
    }
    return "?";
}

/// Membership predicate of one family of parallel cut edges.
struct CutPredicate {
    CutKind kind;
    std::string label;
    std::function<bool(Outcome)> holds;
};

/// Everything needed to define a (random out-closed A, random A-cut F) pair on Q(I).
struct InstanceSpec {
    ProductSpace space;
    /// S ∈ A for the given outcome.
    std::function<bool(Outcome, Subset)> in_a;
    std::vector<CutPredicate> predicates;
    /// Indices into `predicates` of the parallel edges from S ∪ {e} to S.
    std::function<std::vector<std::size_t>(Subset, std::size_t)> cut_edges;
    std::uint64_t outcome_cap = kDefaultOutcomeCap;
};

struct CutViolation {
    std::vector<std::uint32_t> outcome;
    HyperEdge edge;
};

/**
 * A fully enumerated instance. Construction sweeps every outcome once and
 * records the weight of {S ∈ A} and of {f ∈ F, S ∈ A} for every S and every
 * cut predicate f, together with out-closedness and cut validity.
 */
class CutDigraphInstance {
public:
    explicit CutDigraphInstance(InstanceSpec spec) : spec_(std::move(spec)) {
        const std::size_t n = spec_.space.ground_size();
        if (n > kMaxGroundSize) {
            throw EnumerationCapExceeded("ground set of " + std::to_string(n) + " elements exceeds the limit of 20");
        }
        const std::uint64_t atoms = spec_.space.atom_count();
        if (atoms > spec_.outcome_cap) {
            throw EnumerationCapExceeded("outcome space has " + std::to_string(atoms) + " atoms, cap is " +
                                         std::to_string(spec_.outcome_cap));
        }
        for (const auto& w : spec_.space.weights) {
            std::uint64_t s = 0;
            for (auto x : w) {
                s += x;
            }
            if (s == 0) {
                throw std::invalid_argument("ground element with zero total weight");
            }
        }
        enumerate();
    }

    std::size_t ground_size() const { return spec_.space.ground_size(); }
    Subset full_set() const { return static_cast<Subset>((std::uint64_t{1} << ground_size()) - 1); }
    const std::vector<CutPredicate>& predicates() const { return spec_.predicates; }
    std::vector<std::size_t> cut_edges(HyperEdge he) const { return spec_.cut_edges(he.head, he.element); }

    const Integer& total_weight() const { return total_; }
    const Integer& weight_in_a(Subset s) const { return a_weight_.at(s); }
    const Integer& weight_cut_and_a(std::size_t predicate, Subset s) const {
        return pred_a_weight_.at(predicate).at(s);
    }
    const Integer& weight_cut(std::size_t predicate) const { return pred_weight_.at(predicate); }

    bool out_closed() const { return !out_closed_violation_; }
    const std::optional<CutViolation>& out_closed_violation() const { return out_closed_violation_; }
    const std::optional<CutViolation>& cut_violation() const { return cut_violation_; }

private:
    void enumerate() {
        const std::size_t n = ground_size();
        const std::size_t subsets = std::size_t{1} << n;
        const std::size_t preds = spec_.predicates.size();
        a_weight_.assign(subsets, 0);
        pred_a_weight_.assign(preds, std::vector<Integer>(subsets, 0));
        pred_weight_.assign(preds, 0);
        total_ = 0;

        std::vector<std::vector<std::size_t>> cut_lists(subsets * n);
        for (Subset s = 0; s < subsets; ++s) {
            for (std::size_t e = 0; e < n; ++e) {
                if (!(s & bit(e))) {
                    cut_lists[s * n + e] = spec_.cut_edges(s, e);
                }
            }
        }

        std::vector<std::uint32_t> outcome(n, 0);
        std::vector<char> in_a(subsets);
        std::vector<char> pred_value(preds);
        // Per-outcome weights are accumulated in 64 bits per (predicate, S)
        // batch and folded into the big-integer tables at the end.
        std::vector<unsigned __int128> a_acc(subsets, 0);
        std::vector<std::vector<unsigned __int128>> pred_a_acc(preds, std::vector<unsigned __int128>(subsets, 0));
        std::vector<unsigned __int128> pred_acc(preds, 0);
        unsigned __int128 total_acc = 0;

        const bool empty_space = spec_.space.atom_count() == 0;
        bool done = empty_space;
        while (!done) {
            unsigned __int128 w = 1;
            for (std::size_t i = 0; i < n; ++i) {
                w *= spec_.space.weights[i][outcome[i]];
            }
            const Outcome view(outcome);
            for (Subset s = 0; s < subsets; ++s) {
                in_a[s] = spec_.in_a(view, s) ? 1 : 0;
            }
            for (std::size_t f = 0; f < preds; ++f) {
                pred_value[f] = spec_.predicates[f].holds(view) ? 1 : 0;
            }
            for (Subset s = 0; s < subsets; ++s) {
                for (std::size_t e = 0; e < n; ++e) {
                    if (s & bit(e)) {
                        continue;
                    }
                    const Subset tail = s | bit(e);
                    if (in_a[tail] && !in_a[s] && !out_closed_violation_) {
                        out_closed_violation_ = CutViolation{outcome, {s, e}};
                    }
                    if (in_a[s] && !in_a[tail] && !cut_violation_) {
                        bool cut = false;
                        for (std::size_t f : cut_lists[s * n + e]) {
                            if (pred_value[f]) {
                                cut = true;
                                break;
                            }
                        }
                        if (!cut) {
                            cut_violation_ = CutViolation{outcome, {s, e}};
                        }
                    }
                }
            }
            if (w != 0) {
                total_acc += w;
                for (Subset s = 0; s < subsets; ++s) {
                    if (in_a[s]) {
                        a_acc[s] += w;
                    }
                }
                for (std::size_t f = 0; f < preds; ++f) {
                    if (!pred_value[f]) {
                        continue;
                    }
                    pred_acc[f] += w;
                    for (Subset s = 0; s < subsets; ++s) {
                        if (in_a[s]) {
                            pred_a_acc[f][s] += w;
                        }
                    }
                }
            }
            // Mixed-radix increment.
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++outcome[i] < spec_.space.weights[i].size()) {
                    break;
                }
                outcome[i] = 0;
            }
            done = i == n;
        }

        total_ = to_integer(total_acc);
        for (Subset s = 0; s < subsets; ++s) {
            a_weight_[s] = to_integer(a_acc[s]);
        }
        for (std::size_t f = 0; f < preds; ++f) {
            pred_weight_[f] = to_integer(pred_acc[f]);
            for (Subset s = 0; s < subsets; ++s) {
                pred_a_weight_[f][s] = to_integer(pred_a_acc[f][s]);
            }
        }
        if (total_ != spec_.space.total_weight()) {
            throw std::logic_error("enumerated weight does not match the product space total");
        }
    }

    static Integer to_integer(unsigned __int128 v) {
        Integer hi = static_cast<std::uint64_t>(v >> 64);
        return (hi << 64) + static_cast<std::uint64_t>(v);
    }

    InstanceSpec spec_;
    Integer total_;
    std::vector<Integer> a_weight_;
    std::vector<std::vector<Integer>> pred_a_weight_;
    std::vector<Integer> pred_weight_;
    std::optional<CutViolation> out_closed_violation_;
    std::optional<CutViolation> cut_violation_;
};

// ---------------------------------------------------------------------------
// Queries.

/// Pr(S ∈ A).
inline Rational exact_prob_A(const CutDigraphInstance& inst, Subset s) {
    return Rational(inst.weight_in_a(s), inst.total_weight());
}

/// Pr(f ∈ F) for cut predicate f.
inline Rational predicate_probability(const CutDigraphInstance& inst, std::size_t predicate) {
    return Rational(inst.weight_cut(predicate), inst.total_weight());
}

/// Pr(f ∈ F | z ∈ A), zero when Pr(z ∈ A) = 0.
inline Rational conditional_cut_probability(const CutDigraphInstance& inst, std::size_t predicate, Subset z) {
    const Integer& denom = inst.weight_in_a(z);
    if (denom == 0) {
        return Rational(0);
    }
    return Rational(inst.weight_cut_and_a(predicate, z), denom);
}

/**
 * Minimum product of weights along directed paths of Q(I) from x down to
 * every z ⊆ x. Entry z of the result is the path minimum for (x, z); entries
 * for z not contained in x are left empty.
 */
inline std::vector<std::optional<Rational>> min_weights_from(std::size_t ground, const WeightAssignment& w, Subset x) {
    std::vector<std::optional<Rational>> best(std::size_t{1} << ground);
    best[x] = Rational(1);
    // Visit subsets of x in decreasing numeric order so every superset within x comes first.
    for (Subset y = x;; y = (y - 1) & x) {
        if (best[y]) {
            for (std::size_t i = 0; i < ground; ++i) {
                if (y & bit(i)) {
                    const Subset z = y & ~bit(i);
                    Rational cand = *best[y] * w(y, i);
                    if (!best[z] || cand < *best[z]) {
                        best[z] = std::move(cand);
                    }
                }
            }
        }
        if (y == 0) {
            break;
        }
    }
    return best;
}

/// Minimum path weight from x to z in Q(I). Requires z ⊆ x.
inline Rational min_weight(std::size_t ground, const WeightAssignment& w, Subset x, Subset z) {
    if (!subset_of(z, x)) {
        throw std::invalid_argument("min_weight: target is not reachable (not a subset of the source)");
    }
    if (w.is_constant()) {
        Rational r = 1;
        for (int i = std::popcount(x & ~z); i > 0; --i) {
            r *= w.constant_value();
        }
        return r;
    }
    return *min_weights_from(ground, w, x)[z];
}

inline Rational min_weight(const CutDigraphInstance& inst, const WeightAssignment& w, Subset x, Subset z) {
    return min_weight(inst.ground_size(), w, x, z);
}

/// Pr(f ∈ F | z ∈ A) times the minimum path weight from the hyper-edge's tail to z.
inline Rational risk(const CutDigraphInstance& inst, HyperEdge he, std::size_t predicate, Subset z,
                     const WeightAssignment& w) {
    if (!subset_of(z, he.head)) {
        throw std::invalid_argument("risk: z must be reachable from the head");
    }
    return conditional_cut_probability(inst, predicate, z) * min_weight(inst, w, he.tail(), z);
}

struct MinRisk {
    Rational value;
    Subset argmin;
};

namespace detail {

inline MinRisk min_risk_with(const CutDigraphInstance& inst, HyperEdge he, std::size_t predicate,
                             const std::vector<std::optional<Rational>>& path_weights) {
    std::optional<MinRisk> best;
    for (Subset z = he.head;; z = (z - 1) & he.head) {
        Rational r = conditional_cut_probability(inst, predicate, z) * *path_weights[z];
        if (!best || r < best->value) {
            best = MinRisk{std::move(r), z};
        }
        if (z == 0) {
            break;
        }
    }
    return *best;
}

}  // namespace detail

/// min over z ⊆ head of risk(he, f, z), with the minimizing z (largest z on ties).
inline MinRisk min_risk(const CutDigraphInstance& inst, HyperEdge he, std::size_t predicate, const WeightAssignment& w) {
    return detail::min_risk_with(inst, he, predicate, min_weights_from(inst.ground_size(), w, he.tail()));
}

struct HypothesisReport {
    bool passed = true;
    HyperEdge tightest{};
    Rational min_slack;  // omega(xy) - 1 - sum of risks at the tightest edge
    std::size_t edges_checked = 0;
};

/// omega(xy) >= 1 + sum_{f in E(x,y)} min_risk(f) at every hyper-edge.
inline HypothesisReport check_hypothesis(const CutDigraphInstance& inst, const WeightAssignment& w) {
    HypothesisReport rep;
    bool first = true;
    const std::size_t n = inst.ground_size();
    for (Subset tail = 1; tail <= inst.full_set(); ++tail) {
        const auto path_weights = min_weights_from(n, w, tail);
        for (std::size_t e = 0; e < n; ++e) {
            if (!(tail & bit(e))) {
                continue;
            }
            const HyperEdge he{tail & ~bit(e), e};
            Rational sum = 1;
            for (std::size_t f : inst.cut_edges(he)) {
                sum += detail::min_risk_with(inst, he, f, path_weights).value;
            }
            Rational slack = w(tail, e) - sum;
            ++rep.edges_checked;
            if (first || slack < rep.min_slack) {
                rep.min_slack = slack;
                rep.tightest = he;
                first = false;
            }
        }
        if (tail == inst.full_set()) {
            break;
        }
    }
    rep.passed = first || rep.min_slack >= 0;
    return rep;
}

struct ConclusionReport {
    bool edge_inequality = true;  // Pr(y ∈ A) <= Pr(x ∈ A) omega(xy) everywhere
    bool corollary = true;        // Pr(x ∈ A) >= Pr(z ∈ A) / min_weight(x, z) for all z ⊆ x
    std::optional<HyperEdge> failing_edge;
    std::optional<std::pair<Subset, Subset>> failing_pair;
    bool passed() const { return edge_inequality && corollary; }
};

/// Checks the conclusion of the lemma and its corollary with exact probabilities.
inline ConclusionReport check_conclusion(const CutDigraphInstance& inst, const WeightAssignment& w) {
    ConclusionReport rep;
    const std::size_t n = inst.ground_size();
    for (Subset x = 0;; ++x) {
        const Integer& wx = inst.weight_in_a(x);
        for (std::size_t e = 0; e < n; ++e) {
            if (!(x & bit(e))) {
                continue;
            }
            const Subset y = x & ~bit(e);
            if (Rational(inst.weight_in_a(y)) > Rational(wx) * w(x, e)) {
                rep.edge_inequality = false;
                if (!rep.failing_edge) {
                    rep.failing_edge = HyperEdge{y, e};
                }
            }
        }
        const auto path_weights = min_weights_from(n, w, x);
        for (Subset z = x;; z = (z - 1) & x) {
            if (Rational(wx) * *path_weights[z] < Rational(inst.weight_in_a(z))) {
                rep.corollary = false;
                if (!rep.failing_pair) {
                    rep.failing_pair = std::make_pair(x, z);
                }
            }
            if (z == 0) {
                break;
            }
        }
        if (x == inst.full_set()) {
            break;
        }
    }
    return rep;
}

/// A is out-closed and F is an A-cut for every outcome.
inline bool validate_cut(const CutDigraphInstance& inst) { return inst.out_closed() && !inst.cut_violation(); }

// ---------------------------------------------------------------------------
// Instance builders for edge colorings of small graphs.

namespace detail {

struct CycleMask {
    CycleWitness cycle;
    Subset mask;
};

inline std::vector<CycleMask> even_cycles(const Graph& g, std::size_t max_len) {
    std::vector<CycleMask> out;
    for (auto& c : enumerate_cycles(g, max_len)) {
        if (c.length() % 2 != 0) {
            continue;
        }
        Subset m = 0;
        for (EdgeId e : c.edges) {
            m |= bit(e);
        }
        out.push_back({std::move(c), m});
    }
    return out;
}

inline std::vector<std::pair<EdgeId, EdgeId>> adjacent_pairs(const Graph& g) {
    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        for (EdgeId f : g.adjacent_edges(e)) {
            if (f > e) {
                out.emplace_back(e, f);
            }
        }
    }
    return out;
}

/// Colors alternate a, b, a, b along the cycle (a == b allowed).
template <typename ColorOf>
bool alternates(const CycleWitness& c, ColorOf&& color) {
    const auto a = color(c.edges[0]);
    const auto b = color(c.edges[1]);
    for (std::size_t i = 2; i < c.length(); ++i) {
        if (color(c.edges[i]) != (i % 2 == 0 ? a : b)) {
            return false;
        }
    }
    return true;
}

inline void require_small(const Graph& g) {
    if (g.edge_count() > 12) {
        throw EnumerationCapExceeded("instance builders accept at most 12 edges, got " + std::to_string(g.edge_count()));
    }
}

}  // namespace detail

/**
 * Uniform random m-coloring of the edges; S ∈ A iff the coloring is an
 * acyclic edge coloring of G[S]. Cut edges for (S ∪ {e}, S): one edge f
 * (e clashes with some neighbor in G) and one f_C per even cycle C through e
 * (C alternates two colors).
 *
 * With `max_cycle_length`, A only forbids bichromatic cycles up to that
 * length and only those cycles get cut edges.
 */
inline CutDigraphInstance build_acyclic_instance(const Graph& g, std::uint32_t palette,
                                                 std::optional<std::size_t> max_cycle_length = std::nullopt,
                                                 std::uint64_t outcome_cap = kDefaultOutcomeCap) {
    detail::require_small(g);
    if (palette < 1) {
        throw std::invalid_argument("palette must be positive");
    }
    const std::size_t n = g.edge_count();
    const auto cycles = std::make_shared<std::vector<detail::CycleMask>>(
        detail::even_cycles(g, max_cycle_length.value_or(n)));
    const auto pairs = std::make_shared<std::vector<std::pair<EdgeId, EdgeId>>>(detail::adjacent_pairs(g));

    InstanceSpec spec;
    spec.space = ProductSpace::uniform(n, palette);
    spec.outcome_cap = outcome_cap;
    spec.in_a = [cycles, pairs](Outcome col, Subset s) {
        for (auto [e, f] : *pairs) {
            if ((s & bit(e)) && (s & bit(f)) && col[e] == col[f]) {
                return false;
            }
        }
        for (const auto& c : *cycles) {
            if (subset_of(c.mask, s) && detail::alternates(c.cycle, [&](EdgeId e) { return col[e]; })) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::vector<std::size_t>> per_edge(n);
    for (EdgeId e = 0; e < n; ++e) {
        const auto nbrs = g.adjacent_edges(e);
        spec.predicates.push_back({CutKind::adjacent_clash, "f[e" + std::to_string(e) + "]",
                                   [e, nbrs](Outcome col) {
                                       for (EdgeId f : nbrs) {
                                           if (col[f] == col[e]) {
                                               return true;
                                           }
                                       }
                                       return false;
                                   }});
        per_edge[e].push_back(spec.predicates.size() - 1);
    }
    for (std::size_t ci = 0; ci < cycles->size(); ++ci) {
        const auto& c = (*cycles)[ci];
        std::string label = "f_C[";
        for (std::size_t i = 0; i < c.cycle.vertices.size(); ++i) {
            label += (i ? "-" : "") + std::to_string(c.cycle.vertices[i]);
        }
        label += "]";
        spec.predicates.push_back({CutKind::bichromatic_cycle, label, [cycles, ci](Outcome col) {
                                       return detail::alternates((*cycles)[ci].cycle,
                                                                 [&](EdgeId e) { return col[e]; });
                                   }});
        for (EdgeId e : c.cycle.edges) {
            per_edge[e].push_back(spec.predicates.size() - 1);
        }
    }
    spec.cut_edges = [per_edge](Subset, std::size_t e) { return per_edge[e]; };
    return CutDigraphInstance(std::move(spec));
}

/// Keep/recolor probability as an exact fraction numerator/denominator.
struct Probability {
    std::uint64_t numerator;
    std::uint64_t denominator;
};

/**
 * Sparse recoloring of a proper coloring psi: every edge independently keeps
 * psi(e) with probability 1-p or takes one of `new_palette` fresh colors,
 * each with probability p/new_palette. Fresh color j is represented as
 * psi.palette_size() + j.
 *
 * Outcome value 0 means "kept"; value j+1 means fresh color j. S ∈ A iff on
 * G[S] the new coloring is proper, every bichromatic cycle was already
 * bichromatic under psi, and no bichromatic cycle has length >= long_threshold.
 * Cut edges follow the five-type taxonomy.
 */
inline CutDigraphInstance build_recolor_instance(const Graph& g, const EdgeColoring& psi, Probability p,
                                                 std::uint32_t new_palette, std::size_t long_threshold,
                                                 std::uint64_t outcome_cap = kDefaultOutcomeCap) {
    detail::require_small(g);
    if (!psi.is_total() || find_conflict(g, psi)) {
        throw std::invalid_argument("build_recolor_instance requires a total proper coloring psi");
    }
    if (p.denominator == 0 || p.numerator > p.denominator || new_palette < 1) {
        throw std::invalid_argument("invalid recolor probability or palette");
    }
    const std::size_t n = g.edge_count();
    const Color base = psi.palette_size();
    const auto psi_colors = std::make_shared<std::vector<Color>>(psi.colors().begin(), psi.colors().end());
    const auto cycles = std::make_shared<std::vector<detail::CycleMask>>(detail::even_cycles(g, n));
    const auto pairs = std::make_shared<std::vector<std::pair<EdgeId, EdgeId>>>(detail::adjacent_pairs(g));

    auto phi = [psi_colors, base](Outcome o, EdgeId e) -> Color {
        return o[e] == 0 ? (*psi_colors)[e] : base + o[e] - 1;
    };
    auto psi_alt = [psi_colors](const CycleWitness& c) {
        return detail::alternates(c, [&](EdgeId e) { return (*psi_colors)[e]; });
    };

    InstanceSpec spec;
    std::vector<std::uint64_t> w(new_palette + 1, p.numerator);
    w[0] = (p.denominator - p.numerator) * new_palette;
    spec.space.weights.assign(n, w);
    spec.outcome_cap = outcome_cap;
    spec.in_a = [cycles, pairs, phi, psi_alt, long_threshold](Outcome o, Subset s) {
        for (auto [e, f] : *pairs) {
            if ((s & bit(e)) && (s & bit(f)) && phi(o, e) == phi(o, f)) {
                return false;
            }
        }
        for (const auto& c : *cycles) {
            if (!subset_of(c.mask, s) || !detail::alternates(c.cycle, [&](EdgeId e) { return phi(o, e); })) {
                continue;
            }
            if (!psi_alt(c.cycle) || c.cycle.length() >= long_threshold) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::vector<std::size_t>> per_edge(n);
    auto add = [&](CutKind kind, std::string label, std::function<bool(Outcome)> holds) {
        spec.predicates.push_back({kind, std::move(label), std::move(holds)});
        return spec.predicates.size() - 1;
    };

    for (auto [e, f] : *pairs) {
        const auto idx = add(CutKind::type1, "type1[e" + std::to_string(e) + ",e" + std::to_string(f) + "]",
                             [e, f](Outcome o) { return o[e] != 0 && o[e] == o[f]; });
        per_edge[e].push_back(idx);
        per_edge[f].push_back(idx);
    }

    for (std::size_t ci = 0; ci < cycles->size(); ++ci) {
        const auto& c = (*cycles)[ci].cycle;
        std::string vs;
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            vs += (i ? "-" : "") + std::to_string(c.vertices[i]);
        }
        auto phi_alt = [cycles, ci, phi](Outcome o) {
            return detail::alternates((*cycles)[ci].cycle, [&](EdgeId e) { return phi(o, e); });
        };
        // Positions of one parity class along the canonical order; `kept`
        // selects which class keeps psi while the other takes fresh colors.
        auto class_pattern = [cycles, ci, phi_alt](std::size_t kept) {
            return [cycles, ci, phi_alt, kept](Outcome o) {
                const auto& cyc = (*cycles)[ci].cycle;
                for (std::size_t i = 0; i < cyc.length(); ++i) {
                    const bool is_kept = o[cyc.edges[i]] == 0;
                    if (is_kept != (i % 2 == kept)) {
                        return false;
                    }
                }
                return phi_alt(o);
            };
        };

        std::optional<std::size_t> t2;
        if (psi_alt(c) && c.length() >= long_threshold) {
            t2 = add(CutKind::type2, "type2[" + vs + "]", [cycles, ci](Outcome o) {
                for (EdgeId e : (*cycles)[ci].cycle.edges) {
                    if (o[e] != 0) {
                        return false;
                    }
                }
                return true;
            });
        }
        const auto t3 = add(CutKind::type3, "type3[" + vs + "]", [cycles, ci, phi_alt](Outcome o) {
            for (EdgeId e : (*cycles)[ci].cycle.edges) {
                if (o[e] == 0) {
                    return false;
                }
            }
            return phi_alt(o);
        });
        // psi constant on each parity class decides which of types 4/5 exist.
        std::array<bool, 2> psi_constant{true, true};
        for (std::size_t i = 2; i < c.length(); ++i) {
            if ((*psi_colors)[c.edges[i]] != (*psi_colors)[c.edges[i % 2]]) {
                psi_constant[i % 2] = false;
            }
        }
        std::array<std::optional<std::size_t>, 2> kept_class;
        for (std::size_t cls = 0; cls < 2; ++cls) {
            if (psi_constant[cls]) {
                kept_class[cls] = add(CutKind::type4, "kept" + std::to_string(cls) + "[" + vs + "]", class_pattern(cls));
            }
        }
        for (std::size_t i = 0; i < c.length(); ++i) {
            const EdgeId e = c.edges[i];
            if (t2) {
                per_edge[e].push_back(*t2);
            }
            per_edge[e].push_back(t3);
            const std::size_t own = i % 2;
            if (kept_class[own]) {
                per_edge[e].push_back(*kept_class[own]);  // type 4 relative to e
            }
            if (kept_class[1 - own]) {
                per_edge[e].push_back(*kept_class[1 - own]);  // type 5 relative to e
            }
        }
    }
    spec.cut_edges = [per_edge](Subset, std::size_t e) { return per_edge[e]; };
    return CutDigraphInstance(std::move(spec));
}

}  // namespace acyclic::lcl

#endif  // ACYCLIC_LCL_HPP
