// acyclic-cli: graph generation, coloring, verification, bound sweeps and LCL checks.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acyclic/acyclic.hpp"

using namespace acyclic;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { exit_ok = 0, exit_parse = 2, exit_precondition = 3, exit_budget = 4, exit_verification = 5 };

struct Failure {
    int code;
    std::string message;
};

std::string num(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{exit_parse, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Failure{exit_precondition, "cannot write " + path};
    }
    out << text;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("ACYCLIC_SEED"); s && *s) {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(s, &pos);
            if (pos == std::string(s).size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw Failure{exit_parse, std::string("ACYCLIC_SEED is not an unsigned integer: ") + s};
    }
    return 0;
}

// Graph input shared by most subcommands.
struct GraphInput {
    std::string file;
    std::string spec;

    void add(CLI::App* cmd) {
        auto* f = cmd->add_option("--graph", file, "graph file (p edge n m / e u v, 1-based)");
        auto* g = cmd->add_option("--generate", spec, "generator spec, e.g. \"cycle 6\" or \"random-girth 60 3 8 1\"");
        f->excludes(g);
        g->excludes(f);
    }

    json describe() const { return file.empty() ? json{{"generate", spec}} : json{{"graph", file}}; }

    Graph load() const {
        if (file.empty() == spec.empty()) {
            throw Failure{exit_parse, "exactly one of --graph or --generate is required"};
        }
        if (!file.empty()) {
            try {
                return io::parse_graph(read_file(file));
            } catch (const io::ParseError& e) {
                throw Failure{exit_parse, file + ": " + e.what()};
            }
        }
        try {
            return gen::generate(spec);
        } catch (const gen::GenerationError& e) {
            throw Failure{exit_precondition, e.what()};
        } catch (const std::invalid_argument& e) {
            throw Failure{exit_parse, e.what()};
        }
    }
};

// ---------------------------------------------------------------------------
// Grids.

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    return out;
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (s.empty() || pos != s.size()) {
        throw Failure{exit_parse, "not a number: '" + s + "'"};
    }
    return v;
}

/// "a,b,c" or "lo..hi" (decades from lo up to hi).
std::vector<double> parse_log_grid(const std::string& text) {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const double lo = to_double(text.substr(0, dots));
        const double hi = to_double(text.substr(dots + 2));
        if (!(lo > 0 && hi >= lo)) {
            throw Failure{exit_parse, "bad range '" + text + "'"};
        }
        std::vector<double> out;
        for (int i = 0;; ++i) {
            const double x = lo * std::pow(10.0, i);
            if (x > hi * (1 + 1e-12)) {
                break;
            }
            out.push_back(x);
        }
        return out;
    }
    std::vector<double> out;
    for (const auto& t : split(text, ',')) {
        out.push_back(to_double(t));
    }
    return out;
}

/// "a,b,c" or "lo..hi" in unit steps.
std::vector<std::size_t> parse_int_grid(const std::string& text) {
    auto as_int = [&](const std::string& s) {
        const double v = to_double(s);
        if (v < 0 || v != std::floor(v)) {
            throw Failure{exit_parse, "not a non-negative integer: '" + s + "'"};
        }
        return static_cast<std::size_t>(v);
    };
    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = as_int(text.substr(0, dots));
        const auto hi = as_int(text.substr(dots + 2));
        for (auto r = lo; r <= hi; ++r) {
            out.push_back(r);
        }
        return out;
    }
    for (const auto& t : split(text, ',')) {
        out.push_back(as_int(t));
    }
    return out;
}

/// "3/2", "7" or a finite decimal such as "1.25", read exactly.
lcl::Rational parse_rational(const std::string& s) {
    try {
        if (s.find('.') == std::string::npos) {
            return lcl::Rational(s);
        }
        const auto dot = s.find('.');
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-") {
            throw std::invalid_argument(s);
        }
        lcl::Integer den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) {
            den *= 10;
        }
        return lcl::Rational(lcl::Integer(digits), den);
    } catch (const std::exception&) {
        throw Failure{exit_parse, "not a rational number: '" + s + "'"};
    }
}

std::string rat(const lcl::Rational& r) { return r.str(); }

std::string csv_document(const json& manifest, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::string out = "# manifest: " + manifest.dump() + "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += (i ? "," : "") + cells[i];
        }
        out += "\n";
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// color

json report_json(const SolveReport& r) {
    json v = json::object();
    for (std::size_t k = 0; k < kViolationKinds; ++k) {
        if (r.violations[k] > 0) {
            v[std::string(to_string(static_cast<ViolationKind>(k)))] = r.violations[k];
        }
    }
    return {{"status", to_string(r.status)}, {"seed", r.seed}, {"iterations", r.iterations}, {"violations", v}};
}

struct ColorCmd {
    GraphInput input;
    std::string mode = "resample";
    Color palette = 0;
    Color extra = 0;
    Color slack = 0;
    double eps = 1.0;
    std::uint64_t budget = 1'000'000;
    std::optional<std::uint64_t> seed;
    bool experimental = false;
    std::string order = "canonical";
    std::string out;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("color", "color a graph");
        input.add(cmd);
        cmd->add_option("--mode", mode, "greedy | resample | two-phase")->check(CLI::IsMember({"greedy", "resample", "two-phase"}));
        cmd->add_option("--palette", palette, "palette size (resample: default ceil(4(Delta-1)); two-phase: phase-1 palette)");
        cmd->add_option("--extra-palette", extra, "two-phase: number of fresh colors");
        cmd->add_option("--slack", slack, "added to automatically chosen palettes");
        cmd->add_option("--epsilon", eps, "two-phase epsilon");
        cmd->add_option("--budget", budget, "resampling budget")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "RNG seed (default $ACYCLIC_SEED or 0)");
        cmd->add_flag("--experimental", experimental, "two-phase: drop the girth requirement and take r from the girth");
        cmd->add_option("--order", order, "scan order")->check(CLI::IsMember({"canonical", "shortest-first"}));
        cmd->add_option("-o,--out", out, "output JSON (default stdout)");
    }

    int run() const {
        const Graph g = input.load();
        SolverConfig cfg;
        cfg.seed = seed.value_or(default_seed());
        cfg.budget = budget;
        cfg.slack = slack;
        cfg.extra_palette = extra;
        cfg.order = order == "canonical" ? ScanOrder::canonical : ScanOrder::shortest_first;
        json manifest = {{"command", "color"}, {"input", input.describe()}, {"mode", mode}, {"seed", cfg.seed},
                         {"budget", budget}};
        json report;
        std::optional<EdgeColoring> col;
        int code = exit_ok;
        if (mode == "greedy") {
            col = greedy_acyclic(g);
            report = {{"status", "success"}};
        } else if (mode == "resample") {
            const auto delta = static_cast<double>(g.max_degree());
            const Color m = palette > 0 ? palette : std::max<Color>(2, static_cast<Color>(std::ceil(4.0 * (delta - 1.0))));
            manifest["palette"] = m;
            const auto rep = acyclic_resample(g, m, cfg);
            report = report_json(rep);
            if (rep.success()) {
                col = rep.coloring;
            } else {
                code = exit_budget;
            }
        } else {
            cfg.base_palette = palette;
            manifest["epsilon"] = eps;
            manifest["experimental"] = experimental;
            manifest["slack"] = slack;
            const auto rep = two_phase_acyclic(g, eps, cfg, {!experimental, {}});
            report = {{"status", to_string(rep.status)}};
            if (rep.status == SolveStatus::infeasible) {
                report["reason"] = rep.infeasible_reason;
                code = exit_precondition;
            } else {
                report["r"] = rep.r;
                report["cutoff1"] = rep.cutoff1;
                report["threshold2"] = rep.threshold2;
                report["phase1_palette"] = rep.phase1_palette;
                report["new_palette"] = rep.new_palette;
                report["p"] = rep.p;
                if (rep.phase1) {
                    report["phase1"] = report_json(*rep.phase1);
                }
                if (rep.phase2) {
                    report["phase2"] = report_json(*rep.phase2);
                }
                if (rep.success()) {
                    col = rep.coloring;
                } else {
                    code = exit_budget;
                }
            }
        }
        if (!col) {
            std::cerr << json{{"manifest", manifest}, {"report", report}}.dump(2) << "\n";
            std::cerr << (code == exit_budget ? "budget exhausted" : "infeasible") << "\n";
            return code;
        }
        manifest["output"] = out.empty() ? "-" : out;
        auto doc = io::coloring_to_json(*col, manifest);
        doc["report"] = report;
        write_output(out, doc.dump(2) + "\n");
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------
// verify

struct VerifyCmd {
    GraphInput input;
    std::string coloring;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("verify", "check that a coloring is acyclic; exit 0 iff it is");
        input.add(cmd);
        cmd->add_option("--coloring", coloring, "coloring JSON")->required();
    }

    int run() const {
        const Graph g = input.load();
        EdgeColoring col;
        try {
            col = io::parse_coloring(read_file(coloring));
        } catch (const std::invalid_argument& e) {
            throw Failure{exit_parse, coloring + ": " + e.what()};
        }
        if (col.size() != g.edge_count()) {
            throw Failure{exit_precondition, "coloring has " + std::to_string(col.size()) + " entries but the graph has " +
                                            std::to_string(g.edge_count()) + " edges"};
        }
        if (const auto c = find_conflict(g, col)) {
            const auto& a = g.edge(c->first);
            const auto& b = g.edge(c->second);
            std::cout << "not proper: edges " << c->first + 1 << " (" << a.u + 1 << " " << a.v + 1 << ") and "
                      << c->second + 1 << " (" << b.u + 1 << " " << b.v + 1 << ") both have color " << col[c->first]
                      << "\n";
            return exit_verification;
        }
        if (const auto w = find_bichromatic_cycle(g, col)) {
            std::cout << "bichromatic cycle of length " << w->cycle.length() << " in colors " << w->colors.first << " "
                      << w->colors.second << "\n  vertices:";
            for (Vertex v : w->cycle.vertices) {
                std::cout << " " << v + 1;
            }
            std::cout << "\n  edges:";
            for (EdgeId e : w->cycle.edges) {
                std::cout << " " << e + 1;
            }
            std::cout << "\n";
            return exit_verification;
        }
        std::cout << "acyclic: " << g.edge_count() << " edges, " << col.used_colors() << " colors used\n";
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------
// bounds

struct BoundsCmd {
    std::string mode = "no-H";
    int k = 2;
    std::string delta_grid = "10..1e8";
    std::string eps_grid = "0.05";
    std::string r_grid = "3..12";
    std::string out;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("bounds", "sweep the feasibility inequalities into CSV");
        cmd->add_option("--mode", mode, "no-H | short | long | girth")->check(CLI::IsMember({"no-H", "short", "long", "girth"}));
        cmd->add_option("--k", k, "forbidden K_{k,k} (no-H mode)")->check(CLI::Range(2, 64));
        cmd->add_option("--delta-grid", delta_grid, "Delta values: list or lo..hi in decades");
        cmd->add_option("--epsilon-grid", eps_grid, "epsilon values (short, long, girth)");
        cmd->add_option("--r-grid", r_grid, "r values (short)");
        cmd->add_option("-o,--out", out, "output CSV (default stdout)");
    }

    int run() const {
        const auto deltas = parse_log_grid(delta_grid);
        json manifest = {{"command", "bounds"}, {"mode", mode}, {"delta_grid", delta_grid}};
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
        auto guarded = [&](auto&& f) {
            try {
                f();
            } catch (const std::invalid_argument& e) {
                throw Failure{exit_precondition, e.what()};
            } catch (const std::domain_error& e) {
                throw Failure{exit_precondition, e.what()};
            }
        };
        if (mode == "no-H") {
            manifest["k"] = k;
            header = {"delta", "k", "c", "y", "omega", "palette_size", "feasible"};
            guarded([&] {
                for (double d : deltas) {
                    const auto r = bounds::solve_forbidden_H(d, k);
                    rows.push_back({num(d), std::to_string(k), num(r.c), num(r.y), num(r.omega),
                                    std::to_string(r.palette_size), r.feasible ? "1" : "0"});
                }
            });
        } else {
            const auto epss = parse_log_grid(eps_grid);
            manifest["epsilon_grid"] = eps_grid;
            if (mode == "short") {
                manifest["r_grid"] = r_grid;
                const auto rs = parse_int_grid(r_grid);
                header = {"delta", "epsilon", "r", "L", "a", "palette_size", "feasible"};
                guarded([&] {
                    for (double d : deltas) {
                        for (double e : epss) {
                            for (auto r : rs) {
                                const auto b = bounds::short_cycle_params(d, e, r);
                                rows.push_back({num(d), num(e), std::to_string(r), num(*b.L), num(*b.a_coeff),
                                                std::to_string(b.palette_size), b.feasible ? "1" : "0"});
                            }
                        }
                    }
                });
            } else if (mode == "long") {
                header = {"delta", "epsilon", "L", "p", "b", "d", "omega", "palette_size", "feasible"};
                guarded([&] {
                    for (double d : deltas) {
                        for (double e : epss) {
                            const auto b = bounds::long_cycle_params(d, e);
                            rows.push_back({num(d), num(e), num(*b.L), num(*b.p), num(*b.b_coeff), num(*b.d_coeff),
                                            num(b.omega), std::to_string(b.palette_size), b.feasible ? "1" : "0"});
                        }
                    }
                });
            } else {
                header = {"delta", "epsilon", "a", "b", "d", "r", "girth", "L1", "L2", "crossover_ln_delta", "feasible"};
                guarded([&] {
                    for (double d : deltas) {
                        for (double e : epss) {
                            const auto g = bounds::girth_requirement(e, d);
                            rows.push_back({num(d), num(e), num(g.a), num(g.b), num(g.d), std::to_string(g.r),
                                            std::to_string(g.girth), num(g.L1), num(g.L2), num(g.crossover_log_delta),
                                            g.feasible ? "1" : "0"});
                        }
                    }
                });
            }
        }
        manifest["output"] = out.empty() ? "-" : out;
        write_output(out, csv_document(manifest, header, rows));
        return exit_ok;
    }
};

// ---------------------------------------------------------------------------
// lcl-check

struct LclCmd {
    GraphInput input;
    std::uint32_t palette = 3;
    std::vector<std::string> omegas{"1", "3/2", "2", "3"};
    std::optional<std::size_t> max_cycle;
    std::string psi_file;
    std::string p_text = "1/4";
    std::uint32_t new_palette = 2;
    std::size_t threshold = 4;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("lcl-check", "exact Local Cut Lemma check on a tiny instance");
        input.add(cmd);
        cmd->add_option("--palette", palette, "palette size of the uniform coloring")->check(CLI::PositiveNumber);
        cmd->add_option("--omega", omegas, "constant weights to test, e.g. 3/2 (repeatable)");
        cmd->add_option("--max-cycle-length", max_cycle, "only forbid bichromatic cycles up to this length");
        cmd->add_option("--psi", psi_file, "coloring JSON: build the recoloring instance of this coloring instead");
        cmd->add_option("--p", p_text, "recolor probability as a fraction (with --psi)");
        cmd->add_option("--new-palette", new_palette, "fresh colors (with --psi)")->check(CLI::PositiveNumber);
        cmd->add_option("--threshold", threshold, "long-cycle threshold (with --psi)");
    }

    int run() const {
        const Graph g = input.load();
        std::vector<lcl::Rational> weights;
        for (const auto& o : omegas) {
            weights.push_back(parse_rational(o));
        }
        std::optional<lcl::CutDigraphInstance> inst;
        try {
            if (psi_file.empty()) {
                inst.emplace(lcl::build_acyclic_instance(g, palette, max_cycle));
                std::cout << "instance: acyclic, palette " << palette;
                if (max_cycle) {
                    std::cout << ", cycles up to length " << *max_cycle;
                }
            } else {
                EdgeColoring psi;
                try {
                    psi = io::parse_coloring(read_file(psi_file));
                } catch (const std::invalid_argument& e) {
                    throw Failure{exit_parse, psi_file + ": " + e.what()};
                }
                const auto p = parse_rational(p_text);
                if (p < 0 || p >= 1) {
                    throw Failure{exit_precondition, "--p must lie in [0, 1)"};
                }
                const lcl::Probability prob{numerator(p).convert_to<std::uint64_t>(),
                                            denominator(p).convert_to<std::uint64_t>()};
                inst.emplace(lcl::build_recolor_instance(g, psi, prob, new_palette, threshold));
                std::cout << "instance: recolor, p " << rat(p) << ", new palette " << new_palette << ", threshold "
                          << threshold;
            }
        } catch (const lcl::EnumerationCapExceeded& e) {
            throw Failure{exit_precondition, e.what()};
        } catch (const std::invalid_argument& e) {
            throw Failure{exit_precondition, e.what()};
        }
        std::cout << ", " << g.edge_count() << " edges, " << inst->predicates().size() << " cut predicates\n";
        std::cout << "Pr(E in A) = " << rat(lcl::exact_prob_A(*inst, inst->full_set())) << "\n";
        const bool valid = lcl::validate_cut(*inst);
        std::cout << "validate_cut: " << (valid ? "pass" : "FAIL") << " (out-closed " << (inst->out_closed() ? "yes" : "no")
                  << ")\n";
        int code = valid ? exit_ok : exit_verification;
        for (const auto& w : weights) {
            if (w < 1) {
                throw Failure{exit_precondition, "weights must be at least 1"};
            }
            const auto assignment = lcl::WeightAssignment::constant(w);
            const auto h = lcl::check_hypothesis(*inst, assignment);
            const auto c = lcl::check_conclusion(*inst, assignment);
            std::cout << "omega = " << rat(w) << ": hypothesis " << (h.passed ? "pass" : "fail") << " (min slack "
                      << rat(h.min_slack) << " at head " << h.tightest.head << " element " << h.tightest.element
                      << "), conclusion " << (c.passed() ? "pass" : "fail") << "\n";
            if (h.passed && !c.passed()) {
                code = exit_verification;
            }
        }
        return code;
    }
};

// ---------------------------------------------------------------------------
// census

struct CensusCmd {
    std::vector<std::string> files;
    std::vector<std::string> specs;
    std::size_t max_length = 8;
    int k = 2;
    std::optional<std::size_t> r_opt;
    std::string out;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("census", "cycle and path counts with lemma-bound checks into CSV");
        cmd->add_option("--graph", files, "graph files (repeatable)");
        cmd->add_option("--generate", specs, "generator specs (repeatable)");
        cmd->add_option("--max-length", max_length, "largest cycle/path length")->check(CLI::Range(3, 64));
        cmd->add_option("--k", k, "forbidden K_{k,k} for the counting bounds")->check(CLI::Range(2, 64));
        cmd->add_option("--r", r_opt, "r for the girth bounds (default floor((girth-1)/2))");
        cmd->add_option("-o,--out", out, "output CSV (default stdout)");
    }

    int run() const {
        std::vector<std::pair<std::string, Graph>> graphs;
        for (const auto& f : files) {
            graphs.emplace_back(f, GraphInput{f, {}}.load());
        }
        for (const auto& s : specs) {
            graphs.emplace_back(s, GraphInput{{}, s}.load());
        }
        if (graphs.empty()) {
            throw Failure{exit_parse, "census needs at least one --graph or --generate"};
        }
        json manifest = {{"command", "census"}, {"graphs", files}, {"generate", specs}, {"max_length", max_length}, {"k", k}};
        if (r_opt) {
            manifest["r"] = *r_opt;
        }
        const std::vector<std::string> header = {"graph", "vertices", "edges", "max_degree", "girth", "r", "length",
                                                 "cycles", "max_cycles_through_edge", "max_paths", "kst_edge_bound",
                                                 "path3_bound", "cycle_count_bound", "girth_path_bound",
                                                 "girth_cycle_bound"};
        std::vector<std::vector<std::string>> rows;
        for (const auto& [name, g] : graphs) {
            const auto gg = girth(g);
            const std::size_t r = r_opt.value_or(gg ? std::max<std::size_t>(2, (*gg - 1) / 2) : 2);
            if (r < 2) {
                throw Failure{exit_precondition, "--r must be at least 2"};
            }
            const auto edge_bound = std::string(to_string(check_kst_edge_bound(g, k)));
            const auto path3 = std::string(to_string(check_path3_bound(g, k)));
            const auto girth_path = std::string(to_string(check_girth_path_bound(g, r)));
            std::map<std::size_t, std::uint64_t> by_length;
            for (const auto& c : enumerate_cycles(g, max_length)) {
                ++by_length[c.length()];
            }
            for (std::size_t len = 3; len <= max_length; ++len) {
                std::uint64_t through = 0;
                for (EdgeId e = 0; e < g.edge_count(); ++e) {
                    through = std::max(through, count_cycles_through_edge(g, e, len));
                }
                std::uint64_t paths = 0;
                for (Vertex u = 0; u < g.vertex_count(); ++u) {
                    const auto counts = path_counts_from(g, u, len);
                    for (Vertex v = 0; v < g.vertex_count(); ++v) {
                        if (v != u) {
                            paths = std::max(paths, counts[v]);
                        }
                    }
                }
                const std::string ccb = len >= 4 ? std::string(to_string(check_cycle_count_bound(g, len, k))) : "not-applicable";
                const std::string gcb = len >= 4 ? std::string(to_string(check_girth_cycle_bound(g, r, len))) : "not-applicable";
                rows.push_back({name, std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
                                std::to_string(g.max_degree()), gg ? std::to_string(*gg) : "inf", std::to_string(r),
                                std::to_string(len), std::to_string(by_length[len]), std::to_string(through),
                                std::to_string(paths), edge_bound, path3, ccb, girth_path, gcb});
            }
        }
        for (auto& row : rows) {
            row[0] = "\"" + row[0] + "\"";
        }
        manifest["output"] = out.empty() ? "-" : out;
        write_output(out, csv_document(manifest, header, rows));
        return exit_ok;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acyclic edge coloring toolkit"};
    app.require_subcommand(1);
    ColorCmd color;
    VerifyCmd verify;
    BoundsCmd bounds_cmd;
    LclCmd lcl_cmd;
    CensusCmd census;
    color.add(app);
    verify.add(app);
    bounds_cmd.add(app);
    lcl_cmd.add(app);
    census.add(app);
    try {
        app.parse(argc, argv);
        if (app.got_subcommand("color")) {
            return color.run();
        }
        if (app.got_subcommand("verify")) {
            return verify.run();
        }
        if (app.got_subcommand("bounds")) {
            return bounds_cmd.run();
        }
        if (app.got_subcommand("lcl-check")) {
            return lcl_cmd.run();
        }
        return census.run();
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    }
}
