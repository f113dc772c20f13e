#ifndef ACYCLIC_GENERATORS_HPP
#define ACYCLIC_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acyclic/extremal.hpp"
#include "acyclic/graph.hpp"

namespace acyclic::gen {

/// A random family could not meet its constraints within the retry limit.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Graph cycle(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs n >= 3");
    }
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) {
        g.add_edge(i, static_cast<Vertex>((i + 1) % n));
    }
    return g;
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

/// K_{1,n}: center 0 and n leaves.
inline Graph star(std::size_t n) {
    Graph g(n + 1);
    for (Vertex i = 1; i <= n; ++i) {
        g.add_edge(0, i);
    }
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

inline Graph heawood() {
    Graph g(14);
    for (Vertex i = 0; i < 14; ++i) {
        g.add_edge(i, (i + 1) % 14);
    }
    for (Vertex i = 0; i < 14; i += 2) {
        g.add_edge(i, (i + 5) % 14);
    }
    return g;
}

/**
 * Uniform-ish d-regular graph by random pairing of n*d half-edges,
 * restarting whenever a loop or repeated pair would appear.
 */
inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_attempts = 1000) {
    if (d >= n || (n * d) % 2 != 0) {
        throw std::invalid_argument("random-regular needs d < n and n*d even");
    }
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Vertex> points;
        for (Vertex v = 0; v < n; ++v) {
            points.insert(points.end(), d, v);
        }
        Graph g(n);
        bool ok = true;
        while (!points.empty() && ok) {
            // Try a few random pairs before giving up on this attempt.
            ok = false;
            for (int tries = 0; tries < 100; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
                std::size_t i = pick(rng);
                std::size_t j = pick(rng);
                if (i == j || points[i] == points[j] || g.has_edge(points[i], points[j])) {
                    continue;
                }
                g.add_edge(points[i], points[j]);
                if (i < j) {
                    std::swap(i, j);
                }
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
                ok = true;
                break;
            }
        }
        if (ok) {
            return g;
        }
    }
    throw GenerationError("random-regular " + std::to_string(n) + " " + std::to_string(d) + ": no simple graph after " +
                          std::to_string(max_attempts) + " attempts");
}

namespace detail {

/// Distance from u to v, or `limit` if it exceeds limit - 1.
inline std::size_t bounded_distance(const Graph& g, Vertex u, Vertex v, std::size_t limit,
                                    std::vector<std::size_t>& dist, std::vector<Vertex>& touched) {
    for (Vertex x : touched) {
        dist[x] = SIZE_MAX;
    }
    touched.clear();
    std::queue<Vertex> q;
    dist[u] = 0;
    touched.push_back(u);
    q.push(u);
    while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        if (x == v) {
            return dist[x];
        }
        if (dist[x] + 1 >= limit) {
            continue;
        }
        for (const auto& inc : g.incident(x)) {
            if (dist[inc.neighbor] == SIZE_MAX) {
                dist[inc.neighbor] = dist[x] + 1;
                touched.push_back(inc.neighbor);
                q.push(inc.neighbor);
            }
        }
    }
    return limit;
}

}  // namespace detail

/**
 * Graph with maximum degree exactly d and girth >= g_min. Vertex pairs are
 * scanned in random order and joined when both have spare degree and are at
 * distance >= g_min - 1, so no short cycle ever forms.
 */
inline Graph random_girth(std::size_t n, std::size_t d, std::size_t g_min, std::uint64_t seed,
                          std::size_t max_attempts = 100) {
    if (n < 2 || d < 1 || g_min < 3) {
        throw std::invalid_argument("random-girth needs n >= 2, d >= 1, g_min >= 3");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Vertex> touched;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        Graph g(n);
        for (auto [u, v] : pairs) {
            if (g.degree(u) >= d || g.degree(v) >= d) {
                continue;
            }
            if (detail::bounded_distance(g, u, v, g_min - 1, dist, touched) >= g_min - 1) {
                g.add_edge(u, v);
            }
        }
        if (g.max_degree() == d) {
            return g;
        }
    }
    throw GenerationError("random-girth " + std::to_string(n) + " " + std::to_string(d) + " " + std::to_string(g_min) +
                          ": maximum degree " + std::to_string(d) + " not reached after " +
                          std::to_string(max_attempts) + " attempts");
}

/**
 * Builds a graph from a spec such as "cycle 6", "complete-bipartite 2 3",
 * "petersen" or "random-girth 60 3 8 7".
 */
inline Graph generate(std::string_view spec) {
    std::istringstream in{std::string(spec)};
    std::string name;
    in >> name;
    std::vector<std::uint64_t> args;
    for (std::string tok; in >> tok;) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || tok[0] == '-') {
            throw std::invalid_argument("generator argument '" + tok + "' is not a non-negative integer");
        }
        args.push_back(v);
    }
    auto need = [&](std::size_t k) {
        if (args.size() != k) {
            throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(k) + " arguments");
        }
    };
    if (name == "cycle") {
        need(1);
        return cycle(args[0]);
    }
    if (name == "path") {
        need(1);
        return path(args[0]);
    }
    if (name == "star") {
        need(1);
        return star(args[0]);
    }
    if (name == "complete") {
        need(1);
        return complete(args[0]);
    }
    if (name == "complete-bipartite") {
        need(2);
        return complete_bipartite_graph(args[0], args[1]);
    }
    if (name == "petersen") {
        need(0);
        return petersen();
    }
    if (name == "heawood") {
        need(0);
        return heawood();
    }
    if (name == "random-regular") {
        need(3);
        return random_regular(args[0], args[1], args[2]);
    }
    if (name == "random-girth") {
        need(4);
        return random_girth(args[0], args[1], args[2], args[3]);
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace acyclic::gen

#endif  // ACYCLIC_GENERATORS_HPP
