#include "doctest.h"
#include "json.hpp"

#include <ramseylab/ramseylab.h>

#include <string>

using nlohmann::json;

namespace
{
    auto take(char * s) -> json
    {
        REQUIRE(s != nullptr);
        auto j = json::parse(s);
        rl_string_free(s);
        return j;
    }

    auto take_text(char * s) -> std::string
    {
        std::string out = s;
        rl_string_free(s);
        return out;
    }
}

TEST_CASE("hypergraph handles")
{
    rl_hypergraph * h = nullptr;
    REQUIRE(rl_hypergraph_complete(5, 3, &h) == RL_OK);
    CHECK(rl_hypergraph_edge_count(h) == 10);
    CHECK(rl_hypergraph_uniformity(h) == 3);
    size_t d = 0;
    CHECK(rl_hypergraph_degree(h, 0, &d) == RL_OK);
    CHECK(d == 6);
    CHECK(rl_hypergraph_degree(h, 9, &d) == RL_ERR_INVALID_VERTEX);

    rl_hypergraph * l = nullptr;
    REQUIRE(rl_hypergraph_link(h, 0, &l) == RL_OK);
    CHECK(rl_hypergraph_edge_count(l) == 6);
    rl_hypergraph_free(l);

    int removed[] = {4};
    rl_hypergraph * g = nullptr;
    REQUIRE(rl_hypergraph_remove_vertices(h, removed, 1, &g) == RL_OK);
    CHECK(rl_hypergraph_edge_count(g) == 4);
    rl_hypergraph_free(g);

    char * mult = nullptr;
    REQUIRE(rl_hypergraph_shadow_multiplicity(h, &mult) == RL_OK);
    CHECK(take(mult).size() == 10);
    rl_hypergraph_free(h);
}

TEST_CASE("parse errors carry the line")
{
    rl_hypergraph * h = nullptr;
    CHECK(rl_hypergraph_parse("3 5 1\n0 1 7\n", &h) == RL_ERR_PARSE);
    CHECK(h == nullptr);
    CHECK(rl_last_error_line() == 2);
    CHECK(std::string(rl_last_error()).size() > 0);

    CHECK(rl_hypergraph_parse(nullptr, &h) == RL_ERR_NULL_ARGUMENT);
    CHECK(rl_hypergraph_complete(3, 4, &h) == RL_ERR_INVALID_PARAMETERS);

    REQUIRE(rl_hypergraph_parse("3 5 2\n1 2 3\n0 1 2\n", &h) == RL_OK);
    CHECK(std::string(rl_last_error()).empty());
    char * text = nullptr;
    REQUIRE(rl_hypergraph_serialize(h, &text) == RL_OK);
    CHECK(take_text(text) == "3 5 2\n0 1 2\n1 2 3\n");
    rl_hypergraph_free(h);
    rl_hypergraph_free(nullptr);
}

TEST_CASE("patterns through the C interface")
{
    rl_hypergraph * h = nullptr;
    REQUIRE(rl_hypergraph_complete(7, 3, &h) == RL_OK);
    int found = 0;
    char * w = nullptr;
    REQUIRE(rl_find_loose_path(h, 3, &found, &w) == RL_OK);
    CHECK(found == 1);
    CHECK(take(w)["edges"].size() == 3);
    rl_hypergraph_free(h);

    REQUIRE(rl_full_star(6, 3, 2, &h) == RL_OK);
    int center = -1, full = 0;
    REQUIRE(rl_star_center(h, &center, &full) == RL_OK);
    CHECK(center == 2);
    CHECK(full == 1);
    w = nullptr;
    REQUIRE(rl_find_loose_path(h, 3, &found, &w) == RL_OK);
    CHECK(found == 0);
    rl_string_free(w);
    rl_hypergraph_free(h);

    rl_coloring * c = nullptr;
    REQUIRE(rl_star_clique_coloring(3, 2, &c) == RL_OK);
    w = nullptr;
    REQUIRE(rl_find_mono_loose_path(c, 3, &found, &w) == RL_OK);
    CHECK(found == 0);
    rl_string_free(w);
    char * text = nullptr;
    REQUIRE(rl_coloring_serialize(c, &text) == RL_OK);
    rl_coloring * back = nullptr;
    CHECK(rl_coloring_parse(text, &back) == RL_OK);
    rl_string_free(text);
    rl_coloring_free(back);
    rl_coloring_free(c);
}

TEST_CASE("search through the C interface")
{
    rl_search_options o{2, 2, 4, 0, 1, 0, 0};
    rl_verdict v;
    char * out = nullptr;
    REQUIRE(rl_decide_ramsey(&o, &v, &out) == RL_OK);
    CHECK(v == RL_VERDICT_WITNESS);
    auto j = take(out);
    CHECK(j["verdict"] == "fails");
    CHECK(j["witness"].get<std::string>().rfind("2 4 6 2\n", 0) == 0);

    o.n = 5;
    o.exhaustive = 1;
    REQUIRE(rl_decide_ramsey(&o, &v, &out) == RL_OK);
    CHECK(v == RL_VERDICT_HOLDS);
    rl_string_free(out);

    o.n = 99;
    CHECK(rl_decide_ramsey(&o, &v, &out) != RL_OK);

    REQUIRE(rl_turan_max_edges(3, 6, "loose-path-3", 0, 1, &v, &out) == RL_OK);
    CHECK(take(out)["max_edges"] == 20);
    CHECK(rl_turan_max_edges(3, 6, "cycle", 0, 1, &v, &out) == RL_ERR_INVALID_PARAMETERS);

    size_t count = 0;
    REQUIRE(rl_enumerate_loose_paths(7, 3, 3, &count, &out) == RL_OK);
    CHECK(count == 630);
    CHECK(take(out).size() == 630);

    size_t vars = 0, clauses = 0;
    REQUIRE(rl_export_cnf(2, 2, 5, &out, &vars, &clauses) == RL_OK);
    CHECK(vars == 20);
    CHECK(clauses == 130);
    CHECK(take_text(out).find("p cnf 20 130\n") != std::string::npos);
}

TEST_CASE("machinery through the C interface")
{
    char * out = nullptr;
    REQUIRE(rl_prune_bipartite(R"({"left":[0,1],"right":[2,3,4,5],"edges":[[0,2],[0,3],[0,4],[0,5],[1,2]]})", &out) == RL_OK);
    auto p = take(out);
    CHECK(p["left"] == json::array({0}));
    CHECK(p["edges"].size() == 4);

    REQUIRE(rl_greedy_tripartition(R"({"weights":{"0":"5","1":"4","2":"3","3":"2","4":"1"}})", &out) == RL_OK);
    auto t = take(out);
    REQUIRE(t["parts"].size() == 3);
    for (auto & part : t["parts"])
        CHECK(part["sum"] == "5");
    CHECK(t["gap"] == "0");

    REQUIRE(rl_derandomized_split(R"({"n":2,"k":2,"assignments":[{"set":[1],"apex":0}]})", &out) == RL_OK);
    auto s = take(out);
    CHECK(s["proper_count"] == 1);
    CHECK(s["expectation"] == "1/4");
    CHECK(rl_derandomized_split(R"({"n":3,"k":3,"assignments":[{"set":[0,1],"apex":1}]})", &out) == RL_ERR_INVALID_ASSIGNMENT);
    CHECK(rl_derandomized_split("{not json", &out) == RL_ERR_PARSE);

    REQUIRE(rl_claim_mm_lower_bound("3/4", 4, 9, "1e-9", &out) == RL_OK);
    auto c = take(out);
    CHECK(c["lo"] == "4");
    CHECK(c["exact"] == true);
    CHECK(rl_prop32_deficiency_bound("5", 4, 9, "1e-9", &out) == RL_ERR_INVALID_PARAMETERS);

    long rs[] = {1, 2};
    rl_verdict v;
    REQUIRE(rl_verify_constant_inequalities(250, 250, rs, 2, &v, &out) == RL_OK);
    auto records = take(out);
    CHECK(v == RL_VERDICT_WITNESS);
    CHECK(records[0]["holds"] == "no");
    CHECK(records[1]["holds"] == "yes");

    REQUIRE(rl_machinery_property_suite(1, 20, &v, &out) == RL_OK);
    CHECK(v == RL_VERDICT_HOLDS);
    rl_string_free(out);
}
