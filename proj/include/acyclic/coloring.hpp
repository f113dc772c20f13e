#ifndef ACYCLIC_COLORING_HPP
#define ACYCLIC_COLORING_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acyclic/graph.hpp"

namespace acyclic {

using Color = std::uint32_t;
inline constexpr Color kUncolored = std::numeric_limits<Color>::max();

/**
 * Total or partial assignment of colors in [0, palette_size) to edges.
 */
class EdgeColoring {
public:
    EdgeColoring() = default;

    /// All `edge_count` edges start uncolored.
    EdgeColoring(std::size_t edge_count, Color palette_size)
        : palette_size_(palette_size), colors_(edge_count, kUncolored) {}

    EdgeColoring(Color palette_size, std::vector<Color> colors)
        : palette_size_(palette_size), colors_(std::move(colors)) {
        for (std::size_t e = 0; e < colors_.size(); ++e) {
            if (colors_[e] != kUncolored && colors_[e] >= palette_size_) {
                throw std::invalid_argument("edge " + std::to_string(e) + " has color " + std::to_string(colors_[e]) +
                                            " outside palette of size " + std::to_string(palette_size_));
            }
        }
    }

    Color palette_size() const { return palette_size_; }
    std::size_t size() const { return colors_.size(); }
    std::span<const Color> colors() const { return colors_; }

    Color operator[](EdgeId e) const { return colors_[e]; }
    bool is_colored(EdgeId e) const { return colors_[e] != kUncolored; }

    void set(EdgeId e, Color c) {
        if (c >= palette_size_) {
            throw std::out_of_range("color " + std::to_string(c) + " outside palette");
        }
        colors_.at(e) = c;
    }
    void clear(EdgeId e) { colors_.at(e) = kUncolored; }

    bool is_total() const { return std::find(colors_.begin(), colors_.end(), kUncolored) == colors_.end(); }
    std::size_t colored_count() const {
        return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUncolored; }));
    }
    /// Number of distinct colors actually used.
    std::size_t used_colors() const {
        std::vector<Color> used;
        for (Color c : colors_) {
            if (c != kUncolored) {
                used.push_back(c);
            }
        }
        std::sort(used.begin(), used.end());
        return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
    }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    Color palette_size_ = 0;
    std::vector<Color> colors_;
};

struct ColorConflict {
    EdgeId first;
    EdgeId second;
    friend bool operator==(const ColorConflict&, const ColorConflict&) = default;
};

/// A bichromatic cycle together with its two colors. `colors.first` is the
/// color of `cycle.edges[0]`.
struct BichromaticWitness {
    CycleWitness cycle;
    std::pair<Color, Color> colors;
};

struct LengthRange {
    std::size_t lo = 0;
    std::size_t hi = std::numeric_limits<std::size_t>::max();
    bool contains(std::size_t len) const { return lo <= len && len <= hi; }
};

namespace detail {

inline void require_matching(const Graph& g, const EdgeColoring& col) {
    if (col.size() != g.edge_count()) {
        throw std::invalid_argument("coloring has " + std::to_string(col.size()) + " entries for " +
                                    std::to_string(g.edge_count()) + " edges");
    }
}

/// Edge at `v` with color `c`, other than `skip`. Assumes a proper coloring.
inline std::optional<EdgeId> edge_with_color(const Graph& g, const EdgeColoring& col, Vertex v, Color c, EdgeId skip) {
    for (const auto& inc : g.incident(v)) {
        if (inc.edge != skip && col[inc.edge] == c) {
            return inc.edge;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * First pair of adjacent colored edges sharing a color, scanning edges in
 * index order. Uncolored edges are ignored, so for partial colorings this
 * checks G[S] with S the colored edges.
 */
inline std::optional<ColorConflict> find_conflict(const Graph& g, const EdgeColoring& col) {
    detail::require_matching(g, col);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!col.is_colored(e)) {
            continue;
        }
        std::optional<EdgeId> best;
        for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
            for (const auto& inc : g.incident(x)) {
                if (inc.edge > e && col[inc.edge] == col[e]) {
                    best = best ? std::min(*best, inc.edge) : inc.edge;
                }
            }
        }
        if (best) {
            return ColorConflict{e, *best};
        }
    }
    return std::nullopt;
}

/// Properness of a total coloring. Throws on partial colorings.
inline bool is_proper(const Graph& g, const EdgeColoring& col) {
    detail::require_matching(g, col);
    if (!col.is_total()) {
        throw std::invalid_argument("is_proper requires a total coloring");
    }
    return !find_conflict(g, col);
}

/**
 * True iff the cycle has even length, is fully colored, and its colors
 * alternate between exactly two distinct values.
 */
inline bool is_bichromatic(const CycleWitness& cycle, const EdgeColoring& col) {
    const std::size_t k = cycle.length();
    if (k < 4 || k % 2 != 0) {
        return false;
    }
    const Color a = col[cycle.edges[0]];
    const Color b = col[cycle.edges[1]];
    if (a == kUncolored || b == kUncolored || a == b) {
        return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (col[cycle.edges[i]] != (i % 2 == 0 ? a : b)) {
            return false;
        }
    }
    return true;
}

/**
 * Every bichromatic cycle whose length lies in `range`, sorted by canonical
 * vertex sequence.
 *
 * Works one color pair at a time: under a proper coloring each component of
 * the two-colored subgraph is a path or an alternating even cycle, so the
 * cycle components are exactly the bichromatic cycles. Requires the coloring
 * to be proper on its colored edges.
 */
inline std::vector<BichromaticWitness> bichromatic_cycles(const Graph& g, const EdgeColoring& col,
                                                          LengthRange range = {}) {
    if (auto conflict = find_conflict(g, col)) {
        throw std::invalid_argument("bichromatic cycle search requires a proper coloring (edges " +
                                    std::to_string(conflict->first) + ", " + std::to_string(conflict->second) + ")");
    }
    std::vector<std::vector<EdgeId>> by_color(col.palette_size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (col.is_colored(e)) {
            by_color[col[e]].push_back(e);
        }
    }
    std::vector<BichromaticWitness> found;
    std::vector<char> seen(g.edge_count(), 0);
    std::vector<Vertex> walk;
    for (Color a = 0; a < col.palette_size(); ++a) {
        if (by_color[a].size() < 2) {
            continue;
        }
        for (Color b = a + 1; b < col.palette_size(); ++b) {
            if (by_color[b].size() < 2) {
                continue;
            }
            for (EdgeId start : by_color[a]) {
                if (seen[start]) {
                    continue;
                }
                seen[start] = 1;
                // Follow the alternating walk out of start.v; it either dies
                // (path component) or comes back to start.u (cycle).
                walk.clear();
                const Edge& se = g.edge(start);
                walk.push_back(se.u);
                Vertex at = se.v;
                EdgeId via = start;
                Color want = b;
                bool closed = false;
                while (true) {
                    auto next = detail::edge_with_color(g, col, at, want, via);
                    if (!next) {
                        break;
                    }
                    if (*next == start) {
                        closed = true;
                        break;
                    }
                    if (want == a) {
                        seen[*next] = 1;
                    }
                    walk.push_back(at);
                    at = g.edge(*next).other(at);
                    via = *next;
                    want = want == a ? b : a;
                }
                if (!closed) {
                    continue;
                }
                CycleWitness c = canonical_cycle(g, walk);
                if (range.contains(c.length())) {
                    const Color first = col[c.edges[0]];
                    found.push_back({std::move(c), {first, first == a ? b : a}});
                }
            }
            for (EdgeId e : by_color[a]) {
                seen[e] = 0;
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const BichromaticWitness& x, const BichromaticWitness& y) { return x.cycle < y.cycle; });
    return found;
}

/**
 * Some bichromatic cycle with length in `range`, or nullopt. When several
 * exist, the one with lexicographically smallest canonical vertex sequence
 * is returned. Throws if the coloring is improper.
 */
inline std::optional<BichromaticWitness> find_bichromatic_cycle(const Graph& g, const EdgeColoring& col,
                                                                LengthRange range = {}) {
    auto all = bichromatic_cycles(g, col, range);
    if (all.empty()) {
        return std::nullopt;
    }
    return std::move(all.front());
}

/**
 * Proper with no bichromatic cycle. Partial colorings are judged on the
 * subgraph of colored edges.
 */
inline bool is_acyclic_coloring(const Graph& g, const EdgeColoring& col) {
    if (find_conflict(g, col)) {
        return false;
    }
    return !find_bichromatic_cycle(g, col);
}

/**
 * Whether coloring edge e with color c (all else fixed) would close a
 * bichromatic cycle through e. Assumes the current coloring is proper and
 * that c does not clash with e's neighbors.
 */
inline bool closes_bichromatic_cycle(const Graph& g, const EdgeColoring& col, EdgeId e, Color c) {
    const Edge& ed = g.edge(e);
    for (const auto& inc : g.incident(ed.u)) {
        if (inc.edge == e || !col.is_colored(inc.edge)) {
            continue;
        }
        const Color b = col[inc.edge];
        if (b == c) {
            continue;
        }
        // Walk b, c, b, c, ... from u; a cycle closes if the walk ends at v
        // through a b-colored edge.
        Vertex at = ed.u;
        EdgeId via = e;
        Color want = b;
        while (true) {
            auto next = detail::edge_with_color(g, col, at, want, via);
            if (!next) {
                break;
            }
            at = g.edge(*next).other(at);
            via = *next;
            if (at == ed.v && want == b) {
                return true;
            }
            if (at == ed.u) {
                break;
            }
            want = want == b ? c : b;
        }
    }
    return false;
}

}  // namespace acyclic

#endif  // ACYCLIC_COLORING_HPP
