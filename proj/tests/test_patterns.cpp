#include "doctest.h"
#include "oracles.hpp"

#include <ramseylab/constructions.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/hypergraph.hpp>
#include <ramseylab/patterns.hpp>

#include <random>

using namespace ramseylab;

TEST_CASE("loose 3-path detection")
{
    auto w = find_loose_path(complete_hypergraph(7, 3), 3);
    REQUIRE(w);
    CHECK(is_loose_path(*w, nullptr));
    CHECK(w->edges <= std::vector<Edge>{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});

    CHECK_FALSE(find_loose_path(complete_hypergraph(6, 3), 3));
    CHECK_FALSE(find_loose_path(complete_hypergraph(9, 4), 3));
    CHECK_FALSE(find_loose_path(full_star(10, 3, 0), 3));
    CHECK_FALSE(find_loose_path(full_star(8, 2, 3), 3));
}

TEST_CASE("loose 2-path detection")
{
    auto w = find_loose_path(Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}}), 2);
    REQUIRE(w);
    CHECK(w->links == std::vector<Vertex>{2});
    CHECK_FALSE(find_loose_path(pair_cover(8, 4, 0, 1), 2));
    CHECK_FALSE(find_loose_path(complete_hypergraph(6, 4), 2));
}

TEST_CASE("detection agrees with brute force on random hypergraphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        int n = 3 * k - 2 + static_cast<int>(rng() % 2);
        auto all = oracle::subsets(n, k);
        std::vector<Edge> edges;
        unsigned keep = 2 + static_cast<unsigned>(rng() % 5);
        for (auto & s : all)
            if (rng() % 16 < keep)
                edges.push_back(s);
        Hypergraph h(k, n, edges);
        auto three = find_loose_path(h, 3);
        CHECK(three.has_value() == oracle::has_loose3(edges));
        if (three)
            CHECK(is_loose_path(*three, &h));
        auto two = find_loose_path(h, 2);
        CHECK(two.has_value() == oracle::has_loose2(edges));
        if (two)
            CHECK(is_loose_path(*two, &h));
    }
}

TEST_CASE("witness checker rejects non-paths")
{
    CHECK_FALSE(is_loose_path({{{0, 1, 2}, {1, 2, 3}, {3, 4, 5}}, {}}, nullptr));
    CHECK_FALSE(is_loose_path({{{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}, {}}, nullptr));
    Hypergraph host(3, 7, {{0, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(is_loose_path({{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}, {2, 4}}, &host));
}

TEST_CASE("star detection")
{
    CHECK(is_star(Hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}})) == 0);
    CHECK_FALSE(is_star(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})));
    CHECK(is_star(Hypergraph(3, 5, {{0, 1, 2}})) == 0);
    CHECK(is_star(Hypergraph(3, 5, {{1, 2, 3}, {1, 2, 4}})) == 1);
    CHECK(is_full_star(full_star(6, 3, 4)));
    CHECK_FALSE(is_full_star(Hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}})));
}

TEST_CASE("monochromatic paths")
{
    auto sc = star_clique_coloring(3, 2);
    CHECK_FALSE(find_mono_loose_path(sc, 3));

    std::vector<int> one(35, 1);
    auto mono = find_mono_loose_path(Coloring(3, 7, 1, one), 3);
    REQUIRE(mono);
    CHECK(mono->color == 1);
    CHECK(is_loose_path(mono->path, nullptr));

    // every 2-coloring of K_5 contains a monochromatic path with three edges
    int clean = 0;
    for (int mask = 0; mask < 1 << 10; ++mask) {
        std::vector<int> colors(10);
        for (int i = 0; i < 10; ++i)
            colors[static_cast<std::size_t>(i)] = 1 + (mask >> i & 1);
        auto found = find_mono_loose_path(Coloring(2, 5, 2, colors), 3);
        clean += ! found;
        if (found)
            CHECK(is_loose_path(found->path, nullptr));
    }
    CHECK(clean == 0);
}

TEST_CASE("coloring classes and file format")
{
    auto sc = star_clique_coloring(3, 2);
    CHECK(sc.color_class(1).edge_count() + sc.color_class(2).edge_count() == 35);
    CHECK(sc.color_of({0, 4, 6}) == 1);
    CHECK(sc.color_of({1, 4, 6}) == 2);
    auto text = serialize_coloring(sc);
    CHECK(text.rfind("3 7 35 2\n0 1 2 1\n", 0) == 0);
    CHECK(parse_coloring(text) == sc);

    CHECK_THROWS_AS(parse_coloring("2 3 3 2\n0 1 1\n0 2 3\n1 2 1\n"), Error);
    CHECK_THROWS_AS(parse_coloring("2 3 3 2\n0 1 1\n0 2 1\n"), Error);
    CHECK_THROWS_AS(parse_coloring("2 3 3 2\n0 1 1\n0 1 2\n1 2 1\n"), Error);
}
