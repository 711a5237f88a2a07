#include "doctest.h"
#include "oracles.hpp"

#include <ramseylab/combinatorics.hpp>
#include <ramseylab/constructions.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/hypergraph.hpp>

#include <random>

using namespace ramseylab;

namespace
{
    auto code_of(auto && body) -> ErrorCode
    {
        try {
            body();
        }
        catch (const Error & e) {
            return e.code();
        }
        FAIL("expected an error");
        return ErrorCode::internal_error;
    }
}

TEST_CASE("binomial and lexicographic ranks")
{
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(62, 31) == 465428353255261088ULL);
    CHECK(code_of([] { binomial(200, 100); }) == ErrorCode::too_large);

    auto lex = oracle::subsets(7, 3);
    std::size_t i = 0;
    for_each_subset(7, 3, [&](std::span<const int> s) {
        REQUIRE(i < lex.size());
        CHECK(std::vector<int>(s.begin(), s.end()) == lex[i]);
        CHECK(lex_rank(s, 7) == i);
        ++i;
        return true;
    });
    CHECK(i == lex.size());
}

TEST_CASE("complete hypergraph")
{
    CHECK(complete_hypergraph(5, 3).edge_count() == 10);
    auto k4 = complete_hypergraph(4, 2);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.uniformity() == 2);
    CHECK(code_of([] { complete_hypergraph(3, 4); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("degrees")
{
    CHECK(degree(complete_hypergraph(5, 3), 0) == 6);
    CHECK(degree(Hypergraph(3, 5), 2) == 0);
    Hypergraph h(3, 5, {{0, 1, 2}, {0, 3, 4}});
    CHECK(degree(h, 0) == 2);
    CHECK(code_of([&] { degree(h, 5); }) == ErrorCode::invalid_vertex);

    CHECK(max_degree(full_star(6, 3, 0)) == std::pair<Vertex, std::size_t>{0, 10});
    CHECK(max_degree(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})) == std::pair<Vertex, std::size_t>{0, 1});
    CHECK(max_degree(complete_hypergraph(4, 2)) == std::pair<Vertex, std::size_t>{0, 3});
}

TEST_CASE("link")
{
    CHECK(link(complete_hypergraph(4, 3), 3) == Hypergraph(2, 4, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(link(Hypergraph(3, 6, {{0, 1, 2}}), 5).empty());
    auto l = link(full_star(7, 3, 2), 2);
    CHECK(l.edge_count() == binomial(6, 2));
    for (auto & e : l.edges())
        CHECK(std::find(e.begin(), e.end(), 2) == e.end());
}

TEST_CASE("shadow and multiplicity")
{
    CHECK(shadow(Hypergraph(3, 3, {{0, 1, 2}})) == Hypergraph(2, 3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(shadow(Hypergraph(3, 5)).empty());
    Hypergraph two(3, 4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(shadow(two).edge_count() == 5);

    auto m = shadow_multiplicity(two);
    CHECK(m.size() == 5);
    CHECK(m.at({0, 1}) == 2);
    for (auto & [set, count] : m)
        if (set != Edge{0, 1})
            CHECK(count == 1);

    auto star = shadow_multiplicity(full_star(5, 3, 0));
    CHECK(star.size() == 10);
    for (auto & [set, count] : star)
        CHECK(count == (set[0] == 0 ? 3u : 1u));
    CHECK(shadow_multiplicity(Hypergraph(3, 5)).empty());
}

TEST_CASE("vertex removal")
{
    std::vector<Vertex> four{4};
    auto g = remove_vertices(complete_hypergraph(5, 3), four);
    CHECK(g.edge_count() == 4);
    CHECK(covered_vertices(g) == std::vector<Vertex>{0, 1, 2, 3});

    auto h = complete_hypergraph(6, 3);
    CHECK(remove_vertices(h, std::span<const Vertex>{}) == h);

    std::vector<Vertex> one{1};
    CHECK(remove_vertices(Hypergraph(3, 5, {{0, 1, 2}}), one).empty());
}

TEST_CASE("file format")
{
    auto h = parse_hypergraph("3 5 1\n0 1 2\n");
    CHECK(h.edge_count() == 1);
    CHECK(h.vertex_count() == 5);

    try {
        parse_hypergraph("3 5 1\n0 1 7\n");
        FAIL("vertex out of range accepted");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::parse_error);
        CHECK(e.line() == 2);
    }
    CHECK(code_of([] { parse_hypergraph("3 5 2\n0 1 2\n"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_hypergraph("3 5 2\n0 1 2\n2 1 0\n"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_hypergraph("3 5 1\n0 1 x\n"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_hypergraph("3 5 1\n0 0 1\n"); }) == ErrorCode::parse_error);

    CHECK(code_of([] { parse_hypergraph("3 5 1\n2 1 0\n"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { parse_hypergraph("3 5 1\n0 1 2 # note\n"); }) == ErrorCode::parse_error);

    // comment lines, blank lines and edge order canonicalize
    auto messy = parse_hypergraph("# header\n3 6 2\n\n  # indented comment\n3 4 5\n0 1 2\n");
    CHECK(serialize_hypergraph(messy) == "3 6 2\n0 1 2\n3 4 5\n");
}

TEST_CASE("serialize then parse is the identity")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        int n = k + static_cast<int>(rng() % 5);
        std::vector<Edge> edges;
        for (auto & s : oracle::subsets(n, k))
            if (rng() % 2)
                edges.push_back(s);
        Hypergraph h(k, n, edges);
        auto text = serialize_hypergraph(h);
        CHECK(parse_hypergraph(text) == h);
        CHECK(serialize_hypergraph(parse_hypergraph(text)) == text);
    }
}

TEST_CASE("construction validates edges")
{
    CHECK(code_of([] { Hypergraph(3, 5, {{0, 1}}); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { Hypergraph(3, 5, {{0, 1, 5}}); }) == ErrorCode::invalid_vertex);
    CHECK(code_of([] { Hypergraph(3, 5, {{0, 1, 2}, {0, 1, 2}}); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { Hypergraph(0, 5); }) == ErrorCode::invalid_parameters);
}
