#include <ramseylab/constructions.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/machinery.hpp>
#include <ramseylab/patterns.hpp>
#include <ramseylab/property_suite.hpp>
#include <ramseylab/ramseylab.h>
#include <ramseylab/search.hpp>

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

using nlohmann::json;
using namespace ramseylab;

struct rl_hypergraph
{
    Hypergraph value;
};

struct rl_coloring
{
    Coloring value;
};

namespace
{
    struct NullArgument
    {
    };

    thread_local std::string last_error;
    thread_local int last_error_line = 0;

    auto status_of(ErrorCode code) -> rl_status
    {
        switch (code) {
            case ErrorCode::invalid_parameters: return RL_ERR_INVALID_PARAMETERS;
            case ErrorCode::invalid_vertex: return RL_ERR_INVALID_VERTEX;
            case ErrorCode::parse_error: return RL_ERR_PARSE;
            case ErrorCode::invalid_assignment: return RL_ERR_INVALID_ASSIGNMENT;
            case ErrorCode::too_large: return RL_ERR_TOO_LARGE;
            case ErrorCode::internal_error: return RL_ERR_INTERNAL;
        }
        return RL_ERR_INTERNAL;
    }

    template <typename Body>
    auto guarded(Body && body) -> rl_status
    {
        last_error.clear();
        last_error_line = 0;
        try {
            body();
            return RL_OK;
        }
        catch (const NullArgument &) {
            last_error = "null argument";
            return RL_ERR_NULL_ARGUMENT;
        }
        catch (const Error & e) {
            last_error = e.what();
            last_error_line = e.line();
            return status_of(e.code());
        }
        catch (const json::exception & e) {
            last_error = std::string("malformed JSON input: ") + e.what();
            return RL_ERR_PARSE;
        }
        catch (const std::bad_alloc &) {
            last_error = "out of memory";
            return RL_ERR_TOO_LARGE;
        }
        catch (const std::exception & e) {
            last_error = e.what();
            return RL_ERR_INTERNAL;
        }
    }


    void require(const void * p)
    {
        if (! p)
            throw NullArgument{};
    }

    auto copy_string(const std::string & s) -> char *
    {
        auto out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    void emit(char ** out, const json & j)
    {
        if (out)
            *out = copy_string(j.dump());
    }

    auto to_json(const LoosePathWitness & w) -> json
    {
        return json{{"edges", w.edges}, {"links", w.links}};
    }

    auto to_json(const Interval & i) -> json
    {
        return json{{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)},
            {"lo_decimal", to_decimal(i.lo, 20, false)}, {"hi_decimal", to_decimal(i.hi, 20, true)},
            {"width", to_decimal(i.width(), 6, true)}, {"exact", i.exact()}};
    }

    // exact text for short values, outward-rounded decimals otherwise
    auto certificate_text(const Rational & q, bool upward) -> std::string
    {
        auto exact = to_string(q);
        return exact.size() <= 60 ? exact : to_decimal(q, 30, upward);
    }

    auto stats_json(const SearchStats & s) -> json
    {
        return json{{"nodes", s.nodes}, {"prunes", s.prunes}, {"wall_seconds", s.wall_seconds}};
    }

    auto hypergraph_of(const rl_hypergraph * h) -> const Hypergraph &
    {
        require(h);
        return h->value;
    }

    void give(rl_hypergraph ** out, Hypergraph h)
    {
        *out = new rl_hypergraph{std::move(h)};
    }

    auto rational_field(const json & j) -> Rational
    {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long>());
        if (j.is_number())
            return parse_rational(j.dump());
        fail(ErrorCode::invalid_parameters, "weight must be a number or a rational string");
    }
}

extern "C" {

const char * rl_version(void)
{
    return "1.0.0";
}

const char * rl_last_error(void)
{
    return last_error.c_str();
}

int rl_last_error_line(void)
{
    return last_error_line;
}

void rl_string_free(char * s)
{
    std::free(s);
}

rl_status rl_hypergraph_parse(const char * text, rl_hypergraph ** out)
{
    return guarded([&] {
        require(text);
        require(out);
        give(out, parse_hypergraph(text));
    });
}

rl_status rl_hypergraph_serialize(const rl_hypergraph * h, char ** out)
{
    return guarded([&] {
        require(out);
        *out = copy_string(serialize_hypergraph(hypergraph_of(h)));
    });
}

void rl_hypergraph_free(rl_hypergraph * h)
{
    delete h;
}

int rl_hypergraph_uniformity(const rl_hypergraph * h)
{
    return h ? h->value.uniformity() : 0;
}

int rl_hypergraph_vertex_count(const rl_hypergraph * h)
{
    return h ? h->value.vertex_count() : 0;
}

size_t rl_hypergraph_edge_count(const rl_hypergraph * h)
{
    return h ? h->value.edge_count() : 0;
}

rl_status rl_hypergraph_complete(int n, int k, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        give(out, complete_hypergraph(n, k));
    });
}

rl_status rl_hypergraph_degree(const rl_hypergraph * h, int v, size_t * out)
{
    return guarded([&] {
        require(out);
        *out = degree(hypergraph_of(h), v);
    });
}

rl_status rl_hypergraph_max_degree(const rl_hypergraph * h, int * vertex, size_t * deg)
{
    return guarded([&] {
        require(vertex);
        require(deg);
        auto [v, d] = max_degree(hypergraph_of(h));
        *vertex = v;
        *deg = d;
    });
}

rl_status rl_hypergraph_link(const rl_hypergraph * h, int v, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        give(out, link(hypergraph_of(h), v));
    });
}

rl_status rl_hypergraph_shadow(const rl_hypergraph * h, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        give(out, shadow(hypergraph_of(h)));
    });
}

rl_status rl_hypergraph_shadow_multiplicity(const rl_hypergraph * h, char ** out)
{
    return guarded([&] {
        require(out);
        json list = json::array();
        for (auto & [f, count] : shadow_multiplicity(hypergraph_of(h)))
            list.push_back({{"set", f}, {"count", count}});
        emit(out, list);
    });
}

rl_status rl_hypergraph_remove_vertices(const rl_hypergraph * h, const int * vertices, size_t count, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        if (count > 0)
            require(vertices);
        give(out, remove_vertices(hypergraph_of(h), std::span<const int>(vertices, count)));
    });
}

rl_status rl_hypergraph_describe(const rl_hypergraph * h, char ** out)
{
    return guarded([&] {
        require(out);
        auto & g = hypergraph_of(h);
        auto [v, d] = max_degree(g);
        emit(out, json{{"k", g.uniformity()}, {"n", g.vertex_count()}, {"m", g.edge_count()},
                      {"degrees", degrees(g)}, {"max_degree", {{"vertex", v}, {"degree", d}}}});
    });
}

rl_status rl_find_loose_path(const rl_hypergraph * h, int length, int * found, char ** witness_json)
{
    return guarded([&] {
        require(found);
        auto w = find_loose_path(hypergraph_of(h), length);
        *found = w ? 1 : 0;
        emit(witness_json, w ? to_json(*w) : json(nullptr));
    });
}

rl_status rl_star_center(const rl_hypergraph * h, int * center, int * full)
{
    return guarded([&] {
        require(center);
        require(full);
        auto c = is_star(hypergraph_of(h));
        *center = c ? *c : -1;
        *full = is_full_star(hypergraph_of(h)) ? 1 : 0;
    });
}

rl_status rl_coloring_parse(const char * text, rl_coloring ** out)
{
    return guarded([&] {
        require(text);
        require(out);
        *out = new rl_coloring{parse_coloring(text)};
    });
}

rl_status rl_coloring_serialize(const rl_coloring * c, char ** out)
{
    return guarded([&] {
        require(c);
        require(out);
        *out = copy_string(serialize_coloring(c->value));
    });
}

void rl_coloring_free(rl_coloring * c)
{
    delete c;
}

rl_status rl_find_mono_loose_path(const rl_coloring * c, int length, int * found, char ** witness_json)
{
    return guarded([&] {
        require(c);
        require(found);
        auto w = find_mono_loose_path(c->value, length);
        *found = w ? 1 : 0;
        emit(witness_json, w ? json{{"color", w->color}, {"path", to_json(w->path)}} : json(nullptr));
    });
}

rl_status rl_star_clique_coloring(int k, int r, rl_coloring ** out)
{
    return guarded([&] {
        require(out);
        *out = new rl_coloring{star_clique_coloring(k, r)};
    });
}

rl_status rl_full_star(int n, int k, int center, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        give(out, full_star(n, k, center));
    });
}

rl_status rl_pair_cover(int n, int k, int a, int b, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        give(out, pair_cover(n, k, a, b));
    });
}

rl_status rl_ramsey_bounds(int k, int r, char ** out)
{
    return guarded([&] {
        require(out);
        auto b = ramsey_bounds(k, r);
        emit(out, json{{"k", b.k}, {"r", b.r}, {"lower", b.lower}, {"upper_kr", b.upper_kr},
                      {"upper_250r", b.upper_250r}, {"caveats", b.caveats}});
    });
}

rl_status rl_decide_ramsey(const rl_search_options * options, rl_verdict * verdict, char ** out)
{
    return guarded([&] {
        require(options);
        require(verdict);
        SearchOutcome outcome = options->exhaustive
            ? exhaustive_decide(options->k, options->r, options->n)
            : decide_ramsey(SearchOptions{options->k, options->r, options->n, options->budget,
                  options->threads, options->vertex_pruning != 0});
        *verdict = outcome.verdict == RamseyVerdict::holds ? RL_VERDICT_HOLDS
            : outcome.verdict == RamseyVerdict::fails      ? RL_VERDICT_WITNESS
                                                           : RL_VERDICT_UNKNOWN;
        emit(out, json{{"k", options->k}, {"r", options->r}, {"n", options->n},
                      {"engine", options->exhaustive ? "exhaustive" : "backtracking"},
                      {"verdict", to_string(outcome.verdict)},
                      {"witness", outcome.witness ? json(serialize_coloring(*outcome.witness)) : json(nullptr)},
                      {"stats", stats_json(outcome.stats)}});
    });
}

rl_status rl_turan_max_edges(int k, int n, const char * pattern, uint64_t budget, int threads, rl_verdict * status, char ** out)
{
    return guarded([&] {
        require(pattern);
        require(status);
        auto p = parse_pattern(pattern);
        auto result = turan_max_edges(k, n, p, budget, threads);
        *status = result.status == TuranStatus::exact ? RL_VERDICT_HOLDS : RL_VERDICT_UNKNOWN;
        emit(out, json{{"k", k}, {"n", n}, {"pattern", to_string(p)}, {"status", to_string(result.status)},
                      {"max_edges", result.max_edges}, {"extremal", serialize_hypergraph(result.extremal)},
                      {"stats", stats_json(result.stats)}});
    });
}

rl_status rl_enumerate_loose_paths(int n, int k, int length, size_t * count, char ** out)
{
    return guarded([&] {
        require(count);
        auto copies = enumerate_loose_paths(n, k, length);
        *count = copies.size();
        emit(out, json(copies));
    });
}

rl_status rl_export_cnf(int k, int r, int n, char ** dimacs, size_t * variables, size_t * clauses)
{
    return guarded([&] {
        require(dimacs);
        auto cnf = export_cnf(k, r, n);
        if (variables)
            *variables = static_cast<size_t>(cnf.variables());
        if (clauses)
            *clauses = cnf.clauses.size();
        *dimacs = copy_string(to_dimacs(cnf));
    });
}

rl_status rl_peel_min_degree(const rl_hypergraph * h, rl_hypergraph ** out)
{
    return guarded([&] {
        require(out);
        give(out, peel_min_degree(hypergraph_of(h)));
    });
}

rl_status rl_prune_bipartite(const char * json_in, char ** out)
{
    return guarded([&] {
        require(json_in);
        require(out);
        auto in = json::parse(json_in);
        BipartiteGraph b{in.at("left").get<std::vector<int>>(), in.at("right").get<std::vector<int>>(),
            in.at("edges").get<std::vector<std::pair<int, int>>>()};
        auto g = prune_bipartite(b);
        emit(out, json{{"left", g.left}, {"right", g.right}, {"edges", g.edges},
                      {"left_threshold", to_string(ratio(static_cast<long>(b.edges.size()), 2 * static_cast<long>(b.left.size())))},
                      {"right_threshold", to_string(ratio(static_cast<long>(b.edges.size()), 2 * static_cast<long>(b.right.size())))}});
    });
}

rl_status rl_greedy_tripartition(const char * json_in, char ** out)
{
    return guarded([&] {
        require(json_in);
        require(out);
        auto in = json::parse(json_in);
        WeightedVertices w;
        for (auto & [key, value] : in.at("weights").items()) {
            std::size_t used = 0;
            int v = std::stoi(key, &used);
            if (used != key.size())
                fail(ErrorCode::invalid_parameters, "weight keys must be vertex ids");
            w[v] = rational_field(value);
        }
        auto t = greedy_tripartition(w);
        json parts = json::array();
        for (int i = 0; i < 3; ++i)
            parts.push_back({{"vertices", t.parts[i]}, {"sum", to_string(t.sums[i])}});
        emit(out, json{{"parts", parts}, {"gap", to_string(t.sums[2] - t.sums[0])}});
    });
}

rl_status rl_derandomized_split(const char * json_in, char ** out)
{
    return guarded([&] {
        require(json_in);
        require(out);
        auto in = json::parse(json_in);
        std::vector<ApexAssignment> assignments;
        for (auto & a : in.at("assignments"))
            assignments.push_back({a.at("set").get<Edge>(), a.at("apex").get<int>()});
        auto s = derandomized_split(assignments, in.at("n").get<int>(), in.at("k").get<int>());
        emit(out, json{{"u1", s.u1}, {"u2", s.u2}, {"proper_count", s.proper_count},
                      {"expectation", to_string(s.expectation)}});
    });
}

rl_status rl_stability_deficiency(const rl_hypergraph * h, char ** out)
{
    return guarded([&] {
        require(out);
        auto s = stability_deficiency(hypergraph_of(h));
        emit(out, json{{"vertex", s.vertex}, {"deficiency", s.deficiency.get_str()},
                      {"bound", to_string(s.bound)}, {"bound_decimal", to_decimal(s.bound, 12, false)},
                      {"holds", s.holds}});
    });
}

rl_status rl_prop32_deficiency_bound(const char * b, int k, int n, const char * precision, char ** out)
{
    return guarded([&] {
        require(b);
        require(precision);
        require(out);
        emit(out, to_json(prop32_deficiency_bound(parse_rational(b), k, n, parse_rational(precision))));
    });
}

rl_status rl_claim_mm_lower_bound(const char * b, int k, int n, const char * precision, char ** out)
{
    return guarded([&] {
        require(b);
        require(precision);
        require(out);
        emit(out, to_json(claim_mm_lower_bound(parse_rational(b), k, n, parse_rational(precision))));
    });
}

rl_status rl_verify_constant_inequalities(int k, long a, const long * r_list, size_t r_count, rl_verdict * verdict, char ** out)
{
    return guarded([&] {
        require(verdict);
        if (r_count > 0)
            require(r_list);
        auto report = verify_constant_inequalities(k, a, std::vector<long>(r_list, r_list + r_count));
        json records = json::array();
        *verdict = RL_VERDICT_HOLDS;
        for (auto & rec : report.records) {
            if (rec.holds == Verdict::no)
                *verdict = RL_VERDICT_WITNESS;
            else if (rec.holds == Verdict::undecided && *verdict == RL_VERDICT_HOLDS)
                *verdict = RL_VERDICT_UNKNOWN;
            records.push_back({{"name", rec.name}, {"statement", rec.statement}, {"params", rec.params},
                {"holds", to_string(rec.holds)},
                {"certificate_kind", rec.certificate_is_ratio ? "lhs/rhs" : "rhs-lhs"},
                {"certificate_lo", certificate_text(rec.certificate.lo, false)},
                {"certificate_hi", certificate_text(rec.certificate.hi, true)},
                {"asymptotic_flag", rec.asymptotic}});
        }
        emit(out, records);
    });
}

rl_status rl_machinery_property_suite(uint64_t seed, int count, rl_verdict * verdict, char ** out)
{
    return guarded([&] {
        require(verdict);
        if (count < 0)
            fail(ErrorCode::invalid_parameters, "count must be nonnegative");
        json results = json::array();
        *verdict = RL_VERDICT_HOLDS;
        for (auto & p : run_machinery_properties(seed, count)) {
            if (p.failures)
                *verdict = RL_VERDICT_WITNESS;
            results.push_back({{"property", p.name}, {"instances", p.instances}, {"failures", p.failures},
                {"first_failure", p.first_failure.empty() ? json(nullptr) : json(p.first_failure)}});
        }
        emit(out, json{{"seed", seed}, {"count", count}, {"properties", results}});
    });
}

}
