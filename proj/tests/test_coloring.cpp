#include <catch_amalgamated.hpp>

#include <random>

#include "acyclic/coloring.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/solver.hpp"
#include "oracles.hpp"

using namespace acyclic;

namespace {

EdgeColoring make(Color m, std::vector<Color> c) { return EdgeColoring(m, std::move(c)); }

}  // namespace

TEST_CASE("coloring construction validates the palette", "[coloring]") {
    CHECK_THROWS_AS(make(2, {0, 2}), std::invalid_argument);
    EdgeColoring col(3, 2);
    CHECK_FALSE(col.is_total());
    col.set(0, 1);
    CHECK(col.colored_count() == 1);
    CHECK_THROWS_AS(col.set(1, 2), std::out_of_range);
    col.set(1, 0);
    col.set(2, 1);
    CHECK(col.is_total());
    CHECK(col.used_colors() == 2);
}

TEST_CASE("properness", "[coloring]") {
    const auto c4 = gen::cycle(4);
    CHECK(is_proper(c4, make(2, {0, 1, 0, 1})));
    const auto star = gen::star(3);
    const auto bad = make(3, {0, 1, 0});
    CHECK_FALSE(is_proper(star, bad));
    CHECK(*find_conflict(star, bad) == ColorConflict{0, 2});
    CHECK_THROWS_AS(is_proper(star, EdgeColoring(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(is_proper(c4, make(2, {0, 1, 0})), std::invalid_argument);
    const auto k4 = gen::complete(4);
    const auto best = exhaustive_min_acyclic(k4);
    CHECK(best.index == 5);
    CHECK(is_proper(k4, best.witness));
}

TEST_CASE("bichromatic cycles by pattern", "[coloring]") {
    const auto c4 = gen::cycle(4);
    const auto whole = enumerate_cycles(c4, 4).front();
    CHECK(is_bichromatic(whole, make(3, {0, 1, 0, 1})));
    CHECK_FALSE(is_bichromatic(whole, make(3, {0, 1, 0, 2})));
    const auto c6 = gen::cycle(6);
    CHECK(is_bichromatic(enumerate_cycles(c6, 6).front(), make(2, {0, 1, 0, 1, 0, 1})));
    const auto c5 = gen::cycle(5);
    CHECK_FALSE(is_bichromatic(enumerate_cycles(c5, 5).front(), make(2, {0, 1, 0, 1, 0})));
    const auto tri = gen::cycle(3);
    CHECK_FALSE(is_bichromatic(enumerate_cycles(tri, 3).front(), make(3, {0, 1, 2})));
}

TEST_CASE("bichromatic search on named colorings", "[coloring]") {
    // K4 edges: 01 02 03 12 13 23; perfect matchings {01,23} {02,13} {03,12}.
    const auto k4 = gen::complete(4);
    const auto matchings = make(3, {0, 1, 2, 2, 1, 0});
    const auto w = find_bichromatic_cycle(k4, matchings);
    REQUIRE(w);
    CHECK(w->cycle.length() == 4);
    CHECK(is_bichromatic(w->cycle, matchings));
    CHECK(bichromatic_cycles(k4, matchings).size() == 3);
    CHECK(w->cycle.vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(w->colors == std::pair<Color, Color>{0, 2});

    CHECK_FALSE(find_bichromatic_cycle(gen::cycle(5), make(3, {0, 1, 0, 1, 2})));

    const auto c8 = gen::cycle(8);
    const auto alt = make(2, {0, 1, 0, 1, 0, 1, 0, 1});
    CHECK_FALSE(find_bichromatic_cycle(c8, alt, LengthRange{4, 6}));
    const auto hit = find_bichromatic_cycle(c8, alt, LengthRange{8, 8});
    REQUIRE(hit);
    CHECK(hit->cycle.length() == 8);

    CHECK_THROWS_AS(find_bichromatic_cycle(gen::cycle(4), make(2, {0, 0, 1, 1})), std::invalid_argument);
}

TEST_CASE("acyclicity", "[coloring]") {
    const auto c4 = gen::cycle(4);
    CHECK(is_acyclic_coloring(c4, make(3, {0, 1, 0, 2})));
    CHECK_FALSE(is_acyclic_coloring(c4, make(2, {0, 1, 0, 1})));
    CHECK_FALSE(is_acyclic_coloring(c4, make(2, {0, 0, 1, 1})));

    const auto petersen = gen::petersen();
    const auto five = find_acyclic_coloring(petersen, 5);
    REQUIRE(five);
    CHECK(five->is_total());
    CHECK(is_acyclic_coloring(petersen, *five));
    const auto cycles = oracle::all_cycles(petersen);
    std::vector<std::uint32_t> colors(five->colors().begin(), five->colors().end());
    CHECK(oracle::acyclic_on(petersen, colors, (oracle::Mask{1} << 15) - 1, cycles));
}

TEST_CASE("partial colorings are judged on the colored edges", "[coloring]") {
    const auto c4 = gen::cycle(4);
    EdgeColoring col(4, 2);
    col.set(0, 0);
    col.set(1, 1);
    col.set(2, 0);
    CHECK(is_acyclic_coloring(c4, col));
    col.set(3, 1);
    CHECK_FALSE(is_acyclic_coloring(c4, col));
}

TEST_CASE("closing a bichromatic cycle", "[coloring]") {
    const auto c4 = gen::cycle(4);
    EdgeColoring col(4, 3);
    col.set(0, 0);
    col.set(1, 1);
    col.set(2, 0);
    CHECK(closes_bichromatic_cycle(c4, col, 3, 1));
    CHECK_FALSE(closes_bichromatic_cycle(c4, col, 3, 2));
}

TEST_CASE("verifier agrees with cycle enumeration on random proper colorings", "[coloring]") {
    std::mt19937_64 rng(7);
    for (const auto& [name, g] : oracle::small_corpus()) {
        INFO(name);
        const auto masks = oracle::all_cycles(g);
        const auto cycles = enumerate_cycles(g, g.vertex_count());
        for (int trial = 0; trial < 300; ++trial) {
            std::uniform_int_distribution<Color> pick(0, 3);
            std::vector<Color> c(g.edge_count());
            for (auto& x : c) {
                x = pick(rng);
            }
            EdgeColoring col(4, c);
            if (find_conflict(g, col)) {
                continue;
            }
            std::vector<oracle::Mask> expected = oracle::bichromatic_masks(g, c, masks);
            std::vector<oracle::Mask> found;
            for (const auto& w : bichromatic_cycles(g, col)) {
                CHECK(is_bichromatic(w.cycle, col));
                CHECK(w.cycle.length() % 2 == 0);
                CHECK(w.cycle.length() >= 4);
                found.push_back(oracle::mask_of(w.cycle.edges));
            }
            std::sort(found.begin(), found.end());
            CHECK(found == expected);
            std::size_t by_pattern = 0;
            for (const auto& cyc : cycles) {
                by_pattern += is_bichromatic(cyc, col) ? 1 : 0;
            }
            CHECK(by_pattern == expected.size());
        }
    }
}

TEST_CASE("acyclic colorings stay acyclic on edge subsets", "[coloring]") {
    const auto g = gen::petersen();
    const auto col = greedy_acyclic(g);
    REQUIRE(is_acyclic_coloring(g, col));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<EdgeId> subset;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (rng() % 2) {
                subset.push_back(e);
            }
        }
        const auto sub = edge_induced_subgraph(g, subset);
        std::vector<Color> restricted;
        for (EdgeId pe : sub.parent_edge) {
            restricted.push_back(col[pe]);
        }
        CHECK(is_acyclic_coloring(sub.graph, EdgeColoring(col.palette_size(), restricted)));
    }
}
