#ifndef ACYCLIC_GRAPH_HPP
#define ACYCLIC_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acyclic {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool has(Vertex x) const { return x == u || x == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/**
 * Simple undirected graph on dense vertex indices [0, n).
 *
 * Edges keep the index they were inserted with. Loops and parallel edges are
 * rejected on insertion, so every Graph value is simple.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

    static Graph from_edges(std::size_t vertex_count,
                            std::span<const std::pair<Vertex, Vertex>> edges) {
        Graph g(vertex_count);
        for (auto [u, v] : edges) {
            g.add_edge(u, v);
        }
        return g;
    }

    static Graph from_edges(std::size_t vertex_count,
                            std::initializer_list<std::pair<Vertex, Vertex>> edges) {
        return from_edges(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
    }

    EdgeId add_edge(Vertex u, Vertex v) {
        if (u >= vertex_count() || v >= vertex_count()) {
            throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        }
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        if (find_edge(u, v)) {
            throw std::invalid_argument("parallel edge " + std::to_string(u) + " " + std::to_string(v));
        }
        const auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({u, v});
        adjacency_[u].push_back({v, id});
        adjacency_[v].push_back({u, id});
        max_degree_ = std::max({max_degree_, adjacency_[u].size(), adjacency_[v].size()});
        return id;
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t max_degree() const { return max_degree_; }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
        const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
        const Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
        for (const auto& inc : a) {
            if (inc.neighbor == target) {
                return inc.edge;
            }
        }
        return std::nullopt;
    }

    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    /// Edges sharing exactly one endpoint with `e`, sorted by index.
    std::vector<EdgeId> adjacent_edges(EdgeId e) const {
        const Edge& ed = edge(e);
        std::vector<EdgeId> out;
        for (Vertex x : {ed.u, ed.v}) {
            for (const auto& inc : adjacency_[x]) {
                if (inc.edge != e) {
                    out.push_back(inc.edge);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::size_t max_degree_ = 0;
};

/**
 * A simple cycle stored in canonical form.
 *
 * `vertices[0]` is the smallest vertex on the cycle and the traversal
 * direction is chosen so that `vertices[1] < vertices.back()`. Edge `i`
 * joins `vertices[i]` and `vertices[(i + 1) % k]`. Two witnesses describe
 * the same cycle iff they compare equal.
 */
struct CycleWitness {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    bool contains(EdgeId e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
    friend auto operator<=>(const CycleWitness& a, const CycleWitness& b) { return a.vertices <=> b.vertices; }
};

/// Builds the canonical witness for the closed vertex walk `walk` (no repeated closing vertex).
inline CycleWitness canonical_cycle(const Graph& g, std::vector<Vertex> walk) {
    const std::size_t k = walk.size();
    if (k < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    const auto min_it = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), min_it, walk.end());
    if (walk[1] > walk.back()) {
        std::reverse(walk.begin() + 1, walk.end());
    }
    CycleWitness c;
    c.edges.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto e = g.find_edge(walk[i], walk[(i + 1) % k]);
        if (!e) {
            throw std::invalid_argument("walk is not a cycle of the graph");
        }
        c.edges.push_back(*e);
    }
    c.vertices = std::move(walk);
    return c;
}

/// Canonical witness from an edge sequence in which consecutive edges share a vertex.
inline CycleWitness cycle_from_edges(const Graph& g, std::span<const EdgeId> edges) {
    const std::size_t k = edges.size();
    if (k < 3) {
        throw std::invalid_argument("cycle needs at least 3 edges");
    }
    std::vector<Vertex> walk;
    walk.reserve(k);
    const Edge& first = g.edge(edges[0]);
    const Edge& second = g.edge(edges[1]);
    Vertex shared = second.has(first.v) ? first.v : first.u;
    if (!second.has(shared)) {
        throw std::invalid_argument("consecutive cycle edges do not meet");
    }
    Vertex cur = first.other(shared);
    for (std::size_t i = 0; i < k; ++i) {
        const Edge& ed = g.edge(edges[i]);
        if (!ed.has(cur)) {
            throw std::invalid_argument("consecutive cycle edges do not meet");
        }
        walk.push_back(cur);
        cur = ed.other(cur);
    }
    if (cur != walk.front()) {
        throw std::invalid_argument("edge sequence is not closed");
    }
    auto sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("edge sequence revisits a vertex");
    }
    return canonical_cycle(g, std::move(walk));
}

/// Length of a shortest cycle, or nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<EdgeId> via(n);
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex x = q.front();
            q.pop();
            if (2 * dist[x] >= best) {
                break;
            }
            for (const auto& inc : g.incident(x)) {
                if (dist[inc.neighbor] == unseen) {
                    dist[inc.neighbor] = dist[x] + 1;
                    via[inc.neighbor] = inc.edge;
                    q.push(inc.neighbor);
                } else if (x == s || via[x] != inc.edge) {
                    best = std::min(best, dist[x] + dist[inc.neighbor] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
        return std::nullopt;
    }
    return best;
}

namespace detail {

template <typename Visit>
void walk_simple_paths(const Graph& g, Vertex at, std::size_t remaining, std::vector<char>& on_path, Visit& visit) {
    if (remaining == 0) {
        visit(at);
        return;
    }
    for (const auto& inc : g.incident(at)) {
        if (!on_path[inc.neighbor]) {
            on_path[inc.neighbor] = 1;
            walk_simple_paths(g, inc.neighbor, remaining - 1, on_path, visit);
            on_path[inc.neighbor] = 0;
        }
    }
}

}  // namespace detail

/**
 * For every vertex v, the number of simple paths with exactly `length` edges
 * from `source` to v. Cost is O(Δ^length).
 */
inline std::vector<std::uint64_t> path_counts_from(const Graph& g, Vertex source, std::size_t length) {
    std::vector<std::uint64_t> counts(g.vertex_count(), 0);
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path.at(source) = 1;
    auto visit = [&](Vertex end) { ++counts[end]; };
    detail::walk_simple_paths(g, source, length, on_path, visit);
    return counts;
}

/// Number of simple u-v paths with exactly `length` edges.
inline std::uint64_t count_paths(const Graph& g, Vertex u, Vertex v, std::size_t length) {
    if (u == v) {
        throw std::invalid_argument("count_paths requires distinct endpoints");
    }
    if (v >= g.vertex_count()) {
        throw std::out_of_range("vertex out of range");
    }
    return path_counts_from(g, u, length)[v];
}

/// Number of simple cycles of length k through edge e, each counted once.
inline std::uint64_t count_cycles_through_edge(const Graph& g, EdgeId e, std::size_t k) {
    if (k < 3) {
        return 0;
    }
    const Edge& ed = g.edge(e);
    // Each such cycle is e plus a unique u-v path of length k-1 starting at u.
    return count_paths(g, ed.u, ed.v, k - 1);
}

/**
 * Every simple cycle of length at most `max_len`, each exactly once, in
 * canonical form, sorted by (length, vertex sequence).
 *
 * Exponential in the worst case; intended for graphs with a few dozen edges
 * or small `max_len`.
 */
inline std::vector<CycleWitness> enumerate_cycles(const Graph& g, std::size_t max_len) {
    std::vector<CycleWitness> out;
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    std::vector<EdgeId> path_edges;

    // Cycles are rooted at their smallest vertex and only the direction with
    // path[1] < path.back() is kept.
    auto extend = [&](auto&& self, Vertex at) -> void {
        const Vertex root = path.front();
        for (const auto& inc : g.incident(at)) {
            const Vertex w = inc.neighbor;
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                CycleWitness c;
                c.vertices = path;
                c.edges = path_edges;
                c.edges.push_back(inc.edge);
                out.push_back(std::move(c));
            } else if (w > root && !on_path[w] && path.size() < max_len) {
                on_path[w] = 1;
                path.push_back(w);
                path_edges.push_back(inc.edge);
                self(self, w);
                path.pop_back();
                path_edges.pop_back();
                on_path[w] = 0;
            }
        }
    };

    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        path_edges.clear();
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), [](const CycleWitness& a, const CycleWitness& b) {
        if (a.length() != b.length()) {
            return a.length() < b.length();
        }
        return a.vertices < b.vertices;
    });
    return out;
}

/**
 * Result of restricting a graph to an edge subset. The vertex set is kept;
 * `parent_edge[i]` is the index in the parent graph of edge i of `graph`.
 */
struct EdgeSubgraph {
    Graph graph;
    std::vector<EdgeId> parent_edge;
};

inline EdgeSubgraph edge_induced_subgraph(const Graph& g, std::span<const EdgeId> subset) {
    std::vector<EdgeId> ids(subset.begin(), subset.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    EdgeSubgraph out{Graph(g.vertex_count()), {}};
    for (EdgeId e : ids) {
        if (e >= g.edge_count()) {
            throw std::out_of_range("edge index " + std::to_string(e) + " not in graph");
        }
        out.graph.add_edge(g.edge(e).u, g.edge(e).v);
        out.parent_edge.push_back(e);
    }
    return out;
}

/**
 * True iff `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
 *
 * Plain backtracking over injective vertex maps with degree pruning; `h` is
 * expected to be tiny (a handful of vertices).
 */
inline bool contains_subgraph(const Graph& g, const Graph& h) {
    const std::size_t hn = h.vertex_count();
    if (hn == 0) {
        return true;
    }
    if (hn > g.vertex_count() || h.edge_count() > g.edge_count() || h.max_degree() > g.max_degree()) {
        return false;
    }
    // Map h's vertices in BFS order so most new vertices have a mapped neighbor.
    std::vector<Vertex> order;
    std::vector<char> queued(hn, 0);
    for (Vertex s = 0; s < hn; ++s) {
        if (queued[s]) {
            continue;
        }
        queued[s] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            const Vertex x = order[head++];
            for (const auto& inc : h.incident(x)) {
                if (!queued[inc.neighbor]) {
                    queued[inc.neighbor] = 1;
                    order.push_back(inc.neighbor);
                }
            }
        }
    }

    constexpr Vertex unmapped = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> image(hn, unmapped);
    std::vector<char> used(g.vertex_count(), 0);

    auto place = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == hn) {
            return true;
        }
        const Vertex hv = order[depth];
        for (Vertex gv = 0; gv < g.vertex_count(); ++gv) {
            if (used[gv] || g.degree(gv) < h.degree(hv)) {
                continue;
            }
            bool ok = true;
            for (const auto& inc : h.incident(hv)) {
                const Vertex mapped = image[inc.neighbor];
                if (mapped != unmapped && !g.has_edge(gv, mapped)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            image[hv] = gv;
            used[gv] = 1;
            if (self(self, depth + 1)) {
                return true;
            }
            used[gv] = 0;
            image[hv] = unmapped;
        }
        return false;
    };
    return place(place, 0);
}

}  // namespace acyclic

#endif  // ACYCLIC_GRAPH_HPP
