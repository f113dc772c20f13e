#ifndef ACYCLIC_EXTREMAL_HPP
#define ACYCLIC_EXTREMAL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "acyclic/graph.hpp"

namespace acyclic {

/**
 * Explicit constants for K_{k,k}-free graphs.
 *
 * The classical bound m <= (k-1)^{1/k} n^{2-1/k} / 2 + (k-1) n / 2 has its
 * linear term absorbed via n <= n^{2-1/k}, giving m <= alpha n^{2-delta} with
 * alpha = (k-1)^{1/k}/2 + (k-1) and delta = 1/k. The uv-path bound
 * beta Delta^{2-delta} then holds with beta = 2^{3-delta} alpha.
 */
struct KstConstants {
    int k;
    double alpha;
    double delta;
    double beta;
};

inline KstConstants kst_constants(int k) {
    if (k < 2) {
        throw std::invalid_argument("kst_constants requires k >= 2");
    }
    const double kd = static_cast<double>(k);
    const double delta = 1.0 / kd;
    const double alpha = std::pow(kd - 1.0, delta) / 2.0 + (kd - 1.0);
    const double beta = std::pow(2.0, 3.0 - delta) * alpha;
    return {k, alpha, delta, beta};
}

inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = 0; j < b; ++j) {
            g.add_edge(i, static_cast<Vertex>(a + j));
        }
    }
    return g;
}

/// Outcome of checking a counting bound on a concrete graph.
enum class BoundCheck { holds, violated, not_applicable };

inline std::string_view to_string(BoundCheck c) {
    switch (c) {
        case BoundCheck::holds: return "holds";
        case BoundCheck::violated: return "violated";
        case BoundCheck::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace detail {

inline BoundCheck holds_if(bool ok) { return ok ? BoundCheck::holds : BoundCheck::violated; }

// Delta^x with the convention that bounds are vacuous for Delta = 0.
inline bool below_power_bound(double count, double coefficient, std::size_t max_degree, double exponent) {
    if (max_degree == 0) {
        return true;
    }
    return count <= coefficient * std::pow(static_cast<double>(max_degree), exponent);
}

}  // namespace detail

/// m <= alpha n^{2-delta} for K_{k,k}-free g; not applicable otherwise.
inline BoundCheck check_kst_edge_bound(const Graph& g, int k) {
    const auto c = kst_constants(k);
    if (contains_subgraph(g, complete_bipartite_graph(k, k))) {
        return BoundCheck::not_applicable;
    }
    const double n = static_cast<double>(g.vertex_count());
    return detail::holds_if(static_cast<double>(g.edge_count()) <= c.alpha * std::pow(n, 2.0 - c.delta));
}

/// Every pair u != v has at most beta Delta^{2-delta} paths of length 3.
inline BoundCheck check_path3_bound(const Graph& g, int k) {
    const auto c = kst_constants(k);
    if (contains_subgraph(g, complete_bipartite_graph(k, k))) {
        return BoundCheck::not_applicable;
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto counts = path_counts_from(g, u, 3);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (v != u && !detail::below_power_bound(static_cast<double>(counts[v]), c.beta, g.max_degree(), 2.0 - c.delta)) {
                return BoundCheck::violated;
            }
        }
    }
    return BoundCheck::holds;
}

/// Every edge lies on at most beta Delta^{cycle_len-2-delta} cycles of length cycle_len.
inline BoundCheck check_cycle_count_bound(const Graph& g, std::size_t cycle_len, int k) {
    if (cycle_len < 4) {
        throw std::invalid_argument("check_cycle_count_bound requires cycle length >= 4");
    }
    const auto c = kst_constants(k);
    if (contains_subgraph(g, complete_bipartite_graph(k, k))) {
        return BoundCheck::not_applicable;
    }
    const double exponent = static_cast<double>(cycle_len) - 2.0 - c.delta;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto n = count_cycles_through_edge(g, e, cycle_len);
        if (!detail::below_power_bound(static_cast<double>(n), c.beta, g.max_degree(), exponent)) {
            return BoundCheck::violated;
        }
    }
    return BoundCheck::holds;
}

/// With girth > 2r (r >= 2): at most one path of length r between any two vertices.
inline BoundCheck check_girth_path_bound(const Graph& g, std::size_t r) {
    if (r < 2) {
        throw std::invalid_argument("girth path bound requires r >= 2");
    }
    const auto gg = girth(g);
    if (gg && *gg <= 2 * r) {
        return BoundCheck::not_applicable;
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto counts = path_counts_from(g, u, r);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (v != u && counts[v] > 1) {
                return BoundCheck::violated;
            }
        }
    }
    return BoundCheck::holds;
}

/// With girth > 2r (r >= 2): every edge lies on at most Delta^{cycle_len-r-1} cycles of length cycle_len.
inline BoundCheck check_girth_cycle_bound(const Graph& g, std::size_t r, std::size_t cycle_len) {
    if (r < 2 || cycle_len < 4) {
        throw std::invalid_argument("girth cycle bound requires r >= 2 and cycle length >= 4");
    }
    const auto gg = girth(g);
    if (gg && *gg <= 2 * r) {
        return BoundCheck::not_applicable;
    }
    const double exponent = static_cast<double>(cycle_len) - static_cast<double>(r) - 1.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto n = count_cycles_through_edge(g, e, cycle_len);
        if (!detail::below_power_bound(static_cast<double>(n), 1.0, g.max_degree(), exponent)) {
            return BoundCheck::violated;
        }
    }
    return BoundCheck::holds;
}

}  // namespace acyclic

#endif  // ACYCLIC_EXTREMAL_HPP
