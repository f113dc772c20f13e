#ifndef ACYCLIC_SOLVER_HPP
#define ACYCLIC_SOLVER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "acyclic/bounds.hpp"
#include "acyclic/coloring.hpp"
#include "acyclic/graph.hpp"

namespace acyclic {

enum class ScanOrder { canonical, shortest_first };

struct SolverConfig {
    Color base_palette = 0;   // m; 0 lets the procedure pick its own size
    Color extra_palette = 0;  // m', fresh colors for recoloring; 0 = automatic
    Color slack = 0;          // added to automatically chosen palette sizes
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    ScanOrder order = ScanOrder::canonical;

    void validate() const {
        if (budget < 1) {
            throw std::invalid_argument("solver budget must be at least 1");
        }
    }
};

/**
 * Keep-or-recolor distribution: each edge keeps its old color with
 * probability 1 - p, otherwise takes one of `new_palette_size` fresh colors.
 */
struct RecolorParams {
    double p = 0.0;
    Color new_palette_size = 1;

    void validate() const {
        if (!(p >= 0.0 && p < 1.0)) {
            throw std::domain_error("recolor probability must lie in [0, 1)");
        }
        if (new_palette_size < 1) {
            throw std::invalid_argument("recolor needs at least one new color");
        }
    }

    /// Takes p from long-cycle parameters, checking (1-p)omega < 1 and p omega / c < 1.
    static RecolorParams from_bounds(const bounds::BoundResult& b, Color new_palette_size) {
        if (!b.p) {
            throw std::invalid_argument("bound result carries no recolor probability");
        }
        const double p = *b.p;
        if (!((1.0 - p) * b.omega < 1.0)) {
            throw std::domain_error("(1-p)omega must be below 1");
        }
        if (!(p * b.omega / b.c < 1.0)) {
            throw std::domain_error("p omega / c must be below 1");
        }
        RecolorParams r{p, new_palette_size};
        r.validate();
        return r;
    }
};

enum class ViolationKind { adjacent_conflict, bichromatic_cycle, type1, type2, type3, type4, type5 };
inline constexpr std::size_t kViolationKinds = 7;

inline std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::adjacent_conflict: return "adjacent-conflict";
        case ViolationKind::bichromatic_cycle: return "bichromatic-cycle";
        case ViolationKind::type1: return "type1";
        case ViolationKind::type2: return "type2";
        case ViolationKind::type3: return "type3";
        case ViolationKind::type4: return "type4";
        case ViolationKind::type5: return "type5";
    }
    return "?";
}

struct ViolationEvent {
    ViolationKind kind;
    std::vector<EdgeId> edges;  // edges to resample
    std::optional<ColorConflict> conflict;
    std::optional<BichromaticWitness> cycle;
    std::string evidence;
};

enum class SolveStatus { success, budget_exhausted, infeasible };

inline std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::success: return "success";
        case SolveStatus::budget_exhausted: return "budget-exhausted";
        case SolveStatus::infeasible: return "infeasible";
    }
    return "?";
}

struct SolveReport {
    SolveStatus status = SolveStatus::budget_exhausted;
    EdgeColoring coloring;
    std::uint64_t iterations = 0;
    std::array<std::uint64_t, kViolationKinds> violations{};
    std::uint64_t seed = 0;

    bool success() const { return status == SolveStatus::success; }
    std::uint64_t count(ViolationKind k) const { return violations[static_cast<std::size_t>(k)]; }
};

// ---------------------------------------------------------------------------
// Violation scanning.

struct AcyclicMode {};
/// Conflicts and bichromatic cycles of length at most max_length.
struct ShortCycleMode {
    std::size_t max_length;
};
/// Contract of a recoloring of psi: proper, bichromatic cycles already
/// bichromatic under psi, none of length >= long_threshold.
struct RecolorMode {
    const EdgeColoring& psi;
    std::size_t long_threshold;
};
using ViolationMode = std::variant<AcyclicMode, ShortCycleMode, RecolorMode>;

namespace detail {

inline EdgeId min_edge(const CycleWitness& c) { return *std::min_element(c.edges.begin(), c.edges.end()); }

inline auto scan_key(const CycleWitness& c, ScanOrder order) {
    const EdgeId e = min_edge(c);
    const std::size_t len = c.length();
    using Key = std::tuple<std::size_t, std::size_t, const std::vector<Vertex>&>;
    return order == ScanOrder::canonical ? Key(e, len, c.vertices) : Key(len, e, c.vertices);
}

/// First element of `cycles` satisfying `pick` in scan order.
template <typename Pick>
const BichromaticWitness* first_in_order(const std::vector<BichromaticWitness>& cycles, ScanOrder order, Pick&& pick) {
    const BichromaticWitness* best = nullptr;
    for (const auto& w : cycles) {
        if (!pick(w)) {
            continue;
        }
        if (!best || scan_key(w.cycle, order) < scan_key(best->cycle, order)) {
            best = &w;
        }
    }
    return best;
}

inline ViolationEvent cycle_event(ViolationKind kind, const BichromaticWitness& w, std::string evidence) {
    return {kind, w.cycle.edges, std::nullopt, w, std::move(evidence)};
}

inline bool psi_alternates(const CycleWitness& c, const EdgeColoring& psi) {
    for (std::size_t i = 2; i < c.length(); ++i) {
        if (psi[c.edges[i]] != psi[c.edges[i % 2]]) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * First violation in scan order: adjacent conflicts (lowest edge, then
 * lowest partner) come before cycles; cycles are ordered by lowest edge
 * index, then length, then canonical vertex sequence (or length first with
 * ScanOrder::shortest_first).
 */
inline std::optional<ViolationEvent> find_violation(const Graph& g, const EdgeColoring& col, const ViolationMode& mode,
                                                    ScanOrder order = ScanOrder::canonical) {
    if (const auto* rm = std::get_if<RecolorMode>(&mode)) {
        detail::require_matching(g, rm->psi);
        if (!rm->psi.is_total() || find_conflict(g, rm->psi)) {
            throw std::invalid_argument("recolor mode requires a total proper coloring psi");
        }
    }
    if (auto conflict = find_conflict(g, col)) {
        const bool recolor = std::holds_alternative<RecolorMode>(mode);
        return ViolationEvent{recolor ? ViolationKind::type1 : ViolationKind::adjacent_conflict,
                              {conflict->first, conflict->second},
                              conflict,
                              std::nullopt,
                              "edges " + std::to_string(conflict->first) + " and " + std::to_string(conflict->second) +
                                  " share color " + std::to_string(col[conflict->first])};
    }
    return std::visit(
        [&](const auto& m) -> std::optional<ViolationEvent> {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, AcyclicMode>) {
                const auto cycles = bichromatic_cycles(g, col);
                if (const auto* w = detail::first_in_order(cycles, order, [](const auto&) { return true; })) {
                    return detail::cycle_event(ViolationKind::bichromatic_cycle, *w, "bichromatic cycle");
                }
                return std::nullopt;
            } else if constexpr (std::is_same_v<M, ShortCycleMode>) {
                const auto cycles = bichromatic_cycles(g, col, LengthRange{0, m.max_length});
                if (const auto* w = detail::first_in_order(cycles, order, [](const auto&) { return true; })) {
                    return detail::cycle_event(ViolationKind::bichromatic_cycle, *w,
                                               "bichromatic cycle of length <= " + std::to_string(m.max_length));
                }
                return std::nullopt;
            } else {
                const Color base = m.psi.palette_size();
                const auto cycles = bichromatic_cycles(g, col);
                const auto* w = detail::first_in_order(cycles, order, [&](const BichromaticWitness& bw) {
                    return bw.cycle.length() >= m.long_threshold || !detail::psi_alternates(bw.cycle, m.psi);
                });
                if (!w) {
                    return std::nullopt;
                }
                const bool first_old = w->colors.first < base;
                const bool second_old = w->colors.second < base;
                if (first_old && second_old) {
                    return detail::cycle_event(ViolationKind::type2, *w, "all edges kept, length >= threshold");
                }
                if (!first_old && !second_old) {
                    return detail::cycle_event(ViolationKind::type3, *w, "all edges recolored");
                }
                const EdgeId anchor = detail::min_edge(w->cycle);
                const bool anchor_kept = col[anchor] < base;
                return detail::cycle_event(anchor_kept ? ViolationKind::type4 : ViolationKind::type5, *w,
                                           "mixed cycle, anchor edge " + std::to_string(anchor) +
                                               (anchor_kept ? " kept" : " recolored"));
            }
        },
        mode);
}

// ---------------------------------------------------------------------------
// Randomized procedures.

inline EdgeColoring random_uniform_coloring(const Graph& g, Color m, std::uint64_t seed) {
    if (m < 1) {
        throw std::invalid_argument("palette must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Color> pick(0, m - 1);
    std::vector<Color> colors(g.edge_count());
    for (auto& c : colors) {
        c = pick(rng);
    }
    return EdgeColoring(m, std::move(colors));
}

namespace detail {

/// Runs the resampling loop; `redraw(e)` gives a fresh color for edge e.
template <typename Redraw>
SolveReport resample_loop(const Graph& g, EdgeColoring col, const ViolationMode& mode, const SolverConfig& config,
                          Redraw&& redraw) {
    SolveReport rep;
    rep.seed = config.seed;
    while (true) {
        auto v = find_violation(g, col, mode, config.order);
        if (!v) {
            rep.status = SolveStatus::success;
            break;
        }
        ++rep.violations[static_cast<std::size_t>(v->kind)];
        if (rep.iterations >= config.budget) {
            rep.status = SolveStatus::budget_exhausted;
            break;
        }
        ++rep.iterations;
        for (EdgeId e : v->edges) {
            col.set(e, redraw(e));
        }
    }
    rep.coloring = std::move(col);
    return rep;
}

}  // namespace detail

/// Uniform random start, then resample every edge of each violation until none remain.
inline SolveReport acyclic_resample(const Graph& g, Color m, const SolverConfig& config) {
    config.validate();
    if (m < 2) {
        throw std::invalid_argument("acyclic_resample needs at least 2 colors");
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<Color> pick(0, m - 1);
    std::vector<Color> colors(g.edge_count());
    for (auto& c : colors) {
        c = pick(rng);
    }
    auto rep = detail::resample_loop(g, EdgeColoring(m, std::move(colors)), AcyclicMode{}, config,
                                     [&](EdgeId) { return pick(rng); });
    if (rep.success() && !is_acyclic_coloring(g, rep.coloring)) {
        throw std::logic_error("resampler reported success on a non-acyclic coloring");
    }
    return rep;
}

/// Proper coloring with no bichromatic cycle of length <= max_length.
inline SolveReport short_cycle_free(const Graph& g, Color m, std::size_t max_length, const SolverConfig& config) {
    config.validate();
    if (m < 1) {
        throw std::invalid_argument("palette must be positive");
    }
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<Color> pick(0, m - 1);
    std::vector<Color> colors(g.edge_count());
    for (auto& c : colors) {
        c = pick(rng);
    }
    auto rep = detail::resample_loop(g, EdgeColoring(m, std::move(colors)), ShortCycleMode{max_length}, config,
                                     [&](EdgeId) { return pick(rng); });
    if (rep.success() && (find_conflict(g, rep.coloring) ||
                          find_bichromatic_cycle(g, rep.coloring, LengthRange{0, max_length}))) {
        throw std::logic_error("short-cycle resampler reported success on an invalid coloring");
    }
    return rep;
}

/// Palette for the short-cycle phase: ceil((2+eps)Delta) plus slack, unless fixed by config.
inline Color short_phase_palette(const Graph& g, double eps, const SolverConfig& config) {
    if (config.base_palette > 0) {
        return config.base_palette;
    }
    const auto p = bounds::ceil_palette(2.0 + eps, static_cast<double>(g.max_degree()));
    return std::max<Color>(1, static_cast<Color>(p) + config.slack);
}

/// Cutoff 2L for the short-cycle phase with girth above 2r.
inline std::size_t short_phase_cutoff(const Graph& g, double eps, std::size_t r) {
    if (g.max_degree() < 2) {
        return 2;
    }
    const auto params = bounds::short_cycle_params(static_cast<double>(g.max_degree()), eps, r);
    return 2 * static_cast<std::size_t>(*params.L);
}

/**
 * Proper coloring with about (2+eps)Delta colors and no bichromatic cycle of
 * length at most 2L, L taken from the short-cycle parameters at (Delta, eps, r).
 */
inline SolveReport phase1_short_cycle_free(const Graph& g, double eps, std::size_t r, const SolverConfig& config) {
    if (r < 2) {
        throw std::invalid_argument("phase 1 requires r >= 2");
    }
    if (const auto gg = girth(g); gg && *gg <= 2 * r) {
        throw std::invalid_argument("phase 1 requires girth > 2r; girth is " + std::to_string(*gg) + ", r = " +
                                    std::to_string(r));
    }
    return short_cycle_free(g, short_phase_palette(g, eps, config), short_phase_cutoff(g, eps, r), config);
}

/// Phase-2 color of edge e: psi(e) when kept, base + j for fresh color j.
inline SolveReport phase2_recolor(const Graph& g, const EdgeColoring& psi, const RecolorParams& params,
                                  std::size_t long_threshold, const SolverConfig& config) {
    config.validate();
    params.validate();
    detail::require_matching(g, psi);
    if (!psi.is_total() || find_conflict(g, psi)) {
        throw std::invalid_argument("phase 2 requires a total proper coloring psi");
    }
    const Color base = psi.palette_size();
    std::mt19937_64 rng(config.seed);
    std::bernoulli_distribution recolor(params.p);
    std::uniform_int_distribution<Color> fresh(0, params.new_palette_size - 1);
    auto draw = [&](EdgeId e) { return recolor(rng) ? base + fresh(rng) : psi[e]; };

    std::vector<Color> colors(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        colors[e] = draw(e);
    }
    auto rep = detail::resample_loop(g, EdgeColoring(base + params.new_palette_size, std::move(colors)),
                                     RecolorMode{psi, long_threshold}, config, draw);
    if (rep.success()) {
        if (find_conflict(g, rep.coloring)) {
            throw std::logic_error("phase 2 reported success on an improper coloring");
        }
        for (const auto& w : bichromatic_cycles(g, rep.coloring)) {
            if (w.cycle.length() >= long_threshold || !detail::psi_alternates(w.cycle, psi)) {
                throw std::logic_error("phase 2 reported success with a forbidden bichromatic cycle");
            }
        }
    }
    return rep;
}

struct TwoPhaseOptions {
    /// Strict mode: demand the girth requirement and L1 > L2. When false,
    /// r comes from the graph's girth and the phase-2 threshold sits right
    /// above the phase-1 cutoff.
    bool enforce_girth_requirement = true;
    std::optional<std::size_t> cutoff_override;
};

struct TwoPhaseReport {
    SolveStatus status = SolveStatus::infeasible;
    std::string infeasible_reason;
    std::size_t r = 0;
    std::size_t cutoff1 = 0;     // phase 1 forbids bichromatic cycles of length <= cutoff1
    std::size_t threshold2 = 0;  // phase 2 forbids them at length >= threshold2
    Color phase1_palette = 0;
    Color new_palette = 0;
    double p = 0.0;
    std::optional<SolveReport> phase1;
    std::optional<SolveReport> phase2;
    EdgeColoring coloring;

    bool success() const { return status == SolveStatus::success; }
};

namespace detail {

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline TwoPhaseReport infeasible(std::string reason) {
    TwoPhaseReport rep;
    rep.status = SolveStatus::infeasible;
    rep.infeasible_reason = std::move(reason);
    return rep;
}

}  // namespace detail

/**
 * Phase 1 at eps/2 (no short bichromatic cycles), then phase 2 recoloring at
 * eps/2 (no long ones). Infeasible parameter combinations are reported with
 * status `infeasible` and no coloring.
 */
inline TwoPhaseReport two_phase_acyclic(const Graph& g, double eps, const SolverConfig& config,
                                        const TwoPhaseOptions& options = {}) {
    config.validate();
    const double h = eps / 2.0;
    const double delta = static_cast<double>(g.max_degree());
    const auto gg = girth(g);
    TwoPhaseReport rep;
    double p = 0.0;

    if (options.enforce_girth_requirement) {
        bounds::GirthRequirement req{};
        try {
            req = bounds::girth_requirement(eps, delta);
        } catch (const std::exception& ex) {
            return detail::infeasible(ex.what());
        }
        if (!req.feasible) {
            return detail::infeasible("L1 = " + std::to_string(req.L1) + " does not exceed L2 = " +
                                      std::to_string(req.L2) + " at Delta = " + std::to_string(g.max_degree()));
        }
        if (gg && *gg <= 2 * req.r) {
            return detail::infeasible("girth " + std::to_string(*gg) + " is below the required " +
                                      std::to_string(req.girth));
        }
        const auto longp = bounds::long_cycle_params(delta, h);
        rep.r = req.r;
        rep.cutoff1 = short_phase_cutoff(g, h, req.r);
        rep.threshold2 = static_cast<std::size_t>(*longp.L);
        p = *longp.p;
    } else {
        if (!(h > 0.0 && h < 1.0)) {
            return detail::infeasible("eps must lie in (0, 2)");
        }
        const std::size_t r = gg ? (*gg - 1) / 2 : std::max<std::size_t>(2, g.edge_count());
        if (r < 2) {
            return detail::infeasible("girth " + std::to_string(*gg) + " leaves no r >= 2");
        }
        rep.r = r;
        rep.cutoff1 = options.cutoff_override.value_or(short_phase_cutoff(g, h, r));
        rep.threshold2 = rep.cutoff1 + 1;
        p = bounds::p_epsilon(h);
    }
    if (rep.threshold2 > rep.cutoff1 + 1) {
        return detail::infeasible("phase-2 threshold " + std::to_string(rep.threshold2) +
                                  " leaves a gap above the phase-1 cutoff " + std::to_string(rep.cutoff1));
    }

    rep.phase1_palette = short_phase_palette(g, h, config);
    rep.new_palette = config.extra_palette > 0
                          ? config.extra_palette
                          : std::max<Color>(1, static_cast<Color>(bounds::ceil_palette(h, delta)) + config.slack);
    rep.p = p;

    SolverConfig c1 = config;
    c1.seed = detail::derive_seed(config.seed, 1);
    rep.phase1 = short_cycle_free(g, rep.phase1_palette, rep.cutoff1, c1);
    if (!rep.phase1->success()) {
        rep.status = SolveStatus::budget_exhausted;
        return rep;
    }
    SolverConfig c2 = config;
    c2.seed = detail::derive_seed(config.seed, 2);
    rep.phase2 = phase2_recolor(g, rep.phase1->coloring, RecolorParams{p, rep.new_palette}, rep.threshold2, c2);
    if (!rep.phase2->success()) {
        rep.status = SolveStatus::budget_exhausted;
        return rep;
    }
    rep.coloring = rep.phase2->coloring;
    if (!is_acyclic_coloring(g, rep.coloring)) {
        throw std::logic_error("two-phase output is not acyclic");
    }
    rep.status = SolveStatus::success;
    return rep;
}

// ---------------------------------------------------------------------------
// Deterministic baselines.

/// Edges in index order take the smallest color creating no conflict and no bichromatic cycle.
inline EdgeColoring greedy_acyclic(const Graph& g) {
    const Color working = static_cast<Color>(std::max<std::size_t>(g.edge_count(), 1));
    EdgeColoring col(g.edge_count(), working);
    std::vector<char> blocked(working);
    Color used = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::fill(blocked.begin(), blocked.end(), 0);
        for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
            for (const auto& inc : g.incident(x)) {
                if (col.is_colored(inc.edge)) {
                    blocked[col[inc.edge]] = 1;
                }
            }
        }
        Color c = 0;
        while (blocked[c] || closes_bichromatic_cycle(g, col, e, c)) {
            ++c;
        }
        col.set(e, c);
        used = std::max(used, c + 1);
    }
    return EdgeColoring(used, std::vector<Color>(col.colors().begin(), col.colors().end()));
}

namespace detail {

inline bool extend_acyclic(const Graph& g, EdgeColoring& col, EdgeId e, Color k, Color used) {
    if (e == g.edge_count()) {
        return true;
    }
    // New colors are interchangeable, so only the first unused one is tried.
    const Color limit = std::min<Color>(k, used + 1);
    for (Color c = 0; c < limit; ++c) {
        bool clash = false;
        for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
            for (const auto& inc : g.incident(x)) {
                if (inc.edge != e && col.is_colored(inc.edge) && col[inc.edge] == c) {
                    clash = true;
                }
            }
        }
        if (clash || closes_bichromatic_cycle(g, col, e, c)) {
            continue;
        }
        col.set(e, c);
        if (extend_acyclic(g, col, e + 1, k, std::max(used, c + 1))) {
            return true;
        }
        col.clear(e);
    }
    return false;
}

}  // namespace detail

/// Some acyclic coloring with at most k colors, by backtracking.
inline std::optional<EdgeColoring> find_acyclic_coloring(const Graph& g, Color k) {
    if (g.edge_count() == 0) {
        return EdgeColoring(k, std::vector<Color>{});
    }
    if (k == 0) {
        return std::nullopt;
    }
    EdgeColoring col(g.edge_count(), k);
    if (detail::extend_acyclic(g, col, 0, k, 0)) {
        return col;
    }
    return std::nullopt;
}

struct AcyclicIndex {
    Color index;
    EdgeColoring witness;
};

/// Exact acyclic chromatic index with a witness. Limited to small graphs.
inline AcyclicIndex exhaustive_min_acyclic(const Graph& g, std::size_t edge_cap = 10) {
    if (g.edge_count() > edge_cap) {
        throw std::length_error("exhaustive search is limited to " + std::to_string(edge_cap) + " edges, got " +
                                std::to_string(g.edge_count()));
    }
    if (g.edge_count() == 0) {
        return {0, EdgeColoring(0, std::vector<Color>{})};
    }
    for (Color k = static_cast<Color>(g.max_degree());; ++k) {
        if (auto col = find_acyclic_coloring(g, k)) {
            return {k, std::move(*col)};
        }
    }
}

}  // namespace acyclic

#endif  // ACYCLIC_SOLVER_HPP
