#ifndef ACYCLIC_IO_HPP
#define ACYCLIC_IO_HPP

// Text graph format (1-based vertices):
//
//   c optional comment lines
//   p edge <n> <m>
//   e <u> <v>        (m lines)
//
// Colorings are JSON objects {"palette_size": P, "colors": [...]} with
// colors listed in file edge order; an optional "manifest" object records
// how the file was produced.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acyclic/coloring.hpp"
#include "acyclic/graph.hpp"

namespace acyclic::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::uint64_t parse_count(const std::string& tok, std::size_t line, std::string_view what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (tok.empty() || pos != tok.size() || tok[0] == '-' || tok[0] == '+') {
        throw ParseError(line, "expected a non-negative integer for " + std::string(what) + ", got '" + tok + "'");
    }
    return v;
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t declared_edges = 0;
    std::size_t header_line = 0;
    Graph g;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag) || tag == "c") {
            continue;
        }
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (tag == "p") {
            if (have_header) {
                throw ParseError(line_no, "second header line");
            }
            if (toks.size() != 3 || toks[0] != "edge") {
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            }
            const auto n = detail::parse_count(toks[1], line_no, "vertex count");
            declared_edges = detail::parse_count(toks[2], line_no, "edge count");
            g = Graph(n);
            have_header = true;
            header_line = line_no;
        } else if (tag == "e") {
            if (!have_header) {
                throw ParseError(line_no, "edge line before the 'p edge' header");
            }
            if (toks.size() != 2) {
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            }
            const auto u = detail::parse_count(toks[0], line_no, "vertex");
            const auto v = detail::parse_count(toks[1], line_no, "vertex");
            for (auto x : {u, v}) {
                if (x < 1 || x > g.vertex_count()) {
                    throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range 1.." +
                                                  std::to_string(g.vertex_count()));
                }
            }
            if (u == v) {
                throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            }
            if (g.has_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            }
            g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'p edge <n> <m>' header");
    }
    if (g.edge_count() != declared_edges) {
        throw ParseError(header_line, "header declares " + std::to_string(declared_edges) + " edges but " +
                                          std::to_string(g.edge_count()) + " were given");
    }
    return g;
}

inline std::string write_graph(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    }
    return out;
}

inline nlohmann::ordered_json coloring_to_json(const EdgeColoring& col,
                                               const nlohmann::ordered_json& manifest = nullptr) {
    nlohmann::ordered_json j;
    j["palette_size"] = col.palette_size();
    auto& colors = j["colors"] = nlohmann::ordered_json::array();
    for (Color c : col.colors()) {
        if (c == kUncolored) {
            colors.push_back(nullptr);
        } else {
            colors.push_back(c);
        }
    }
    if (!manifest.is_null()) {
        j["manifest"] = manifest;
    }
    return j;
}

/// Throws std::invalid_argument on a malformed document.
inline EdgeColoring coloring_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("palette_size") || !j.contains("colors") || !j["colors"].is_array() ||
        !j["palette_size"].is_number_unsigned()) {
        throw std::invalid_argument("coloring JSON needs an unsigned 'palette_size' and a 'colors' array");
    }
    std::vector<Color> colors;
    for (const auto& c : j["colors"]) {
        if (c.is_null()) {
            colors.push_back(kUncolored);
        } else if (c.is_number_unsigned()) {
            colors.push_back(c.get<Color>());
        } else {
            throw std::invalid_argument("colors must be non-negative integers or null");
        }
    }
    return EdgeColoring(j["palette_size"].get<Color>(), std::move(colors));
}

inline EdgeColoring parse_coloring(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::invalid_argument(std::string("coloring JSON: ") + ex.what());
    }
    return coloring_from_json(j);
}

}  // namespace acyclic::io

#endif  // ACYCLIC_IO_HPP
