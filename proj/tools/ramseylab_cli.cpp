// Command-line frontend. Every command is a thin adapter over one call of the
// C API in ramseylab.h.

#include <ramseylab/ramseylab.h>

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using nlohmann::json;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_witness = 1,
        exit_unknown = 2,
        exit_usage = 64,
        exit_parse = 65,
        exit_no_input = 66,
        exit_internal = 70,
    };

    struct Failure
    {
        int code;
        std::string message;
    };

    void check(rl_status status)
    {
        if (status == RL_OK)
            return;
        std::string message = rl_last_error();
        switch (status) {
            case RL_ERR_PARSE: throw Failure{exit_parse, "parse error: " + message};
            case RL_ERR_INTERNAL: throw Failure{exit_internal, "internal error: " + message};
            default: throw Failure{exit_usage, message};
        }
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Failure{exit_no_input, "cannot read " + path};
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write_file(const std::string & path, const std::string & text)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << text))
            throw Failure{exit_no_input, "cannot write " + path};
    }

    struct OwnedString
    {
        char * p = nullptr;
        ~OwnedString() { rl_string_free(p); }
        auto str() const -> std::string { return p ? p : ""; }
        auto json_value() const -> json { return p ? json::parse(p) : json(nullptr); }
    };

    using HypergraphPtr = std::unique_ptr<rl_hypergraph, decltype(&rl_hypergraph_free)>;
    using ColoringPtr = std::unique_ptr<rl_coloring, decltype(&rl_coloring_free)>;

    auto load_hypergraph(const std::string & path) -> HypergraphPtr
    {
        rl_hypergraph * h = nullptr;
        check(rl_hypergraph_parse(read_file(path).c_str(), &h));
        return {h, rl_hypergraph_free};
    }

    auto load_coloring(const std::string & path) -> ColoringPtr
    {
        rl_coloring * c = nullptr;
        check(rl_coloring_parse(read_file(path).c_str(), &c));
        return {c, rl_coloring_free};
    }

    auto text_of(const rl_hypergraph * h) -> std::string
    {
        OwnedString s;
        check(rl_hypergraph_serialize(h, &s.p));
        return s.str();
    }

    auto text_of(const rl_coloring * c) -> std::string
    {
        OwnedString s;
        check(rl_coloring_serialize(c, &s.p));
        return s.str();
    }

    /// What a command hands back: exit code, payload, and a short summary.
    struct Outcome
    {
        int code = exit_ok;
        json result;
        std::string summary;
    };

    auto exit_for(rl_verdict v) -> int
    {
        return v == RL_VERDICT_HOLDS ? exit_ok : v == RL_VERDICT_WITNESS ? exit_witness : exit_unknown;
    }

    // Writes text to path when given, otherwise includes it in the payload.
    void deliver(Outcome & o, const std::string & key, const std::string & path, const std::string & text)
    {
        if (path.empty())
            o.result[key] = text;
        else {
            write_file(path, text);
            o.result[key + "_file"] = path;
        }
    }

    auto default_seed() -> std::uint64_t
    {
        if (const char * env = std::getenv("RAMSEYLAB_SEED"))
            return std::strtoull(env, nullptr, 10);
        return 20170318;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Loose-path Ramsey and Turan computations on k-uniform hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a JSON run report");

    json parameters = json::object();
    std::uint64_t seed = default_seed();
    bool seeded = false;
    std::function<Outcome()> action;

    // detect
    std::string input, pattern = "loose-path-3";
    bool coloring_input = false;
    auto detect = app.add_subcommand("detect", "Find a loose path or star center");
    detect->add_option("--input", input, "Hypergraph (or coloring) file")->required();
    detect->add_option("--pattern", pattern)->check(CLI::IsMember({"loose-path-2", "loose-path-3", "star"}));
    detect->add_flag("--coloring", coloring_input, "Input is a coloring; search monochromatic paths");
    detect->callback([&] {
        parameters = {{"input", input}, {"pattern", pattern}, {"coloring", coloring_input}};
        action = [&] {
            Outcome o;
            if (pattern == "star") {
                if (coloring_input)
                    throw Failure{exit_usage, "star detection takes a hypergraph"};
                auto h = load_hypergraph(input);
                int center = -1, full = 0;
                check(rl_star_center(h.get(), &center, &full));
                o.result = {{"star", center >= 0}, {"center", center >= 0 ? json(center) : json(nullptr)}, {"full", full == 1}};
                o.summary = center >= 0 ? "star centered at " + std::to_string(center) + (full ? " (full)" : "") : "not a star";
                return o;
            }
            int length = pattern == "loose-path-2" ? 2 : 3;
            int found = 0;
            OwnedString w;
            if (coloring_input) {
                auto c = load_coloring(input);
                check(rl_find_mono_loose_path(c.get(), length, &found, &w.p));
            }
            else {
                auto h = load_hypergraph(input);
                check(rl_find_loose_path(h.get(), length, &found, &w.p));
            }
            o.result = {{"found", found == 1}, {"witness", w.json_value()}};
            o.code = found ? exit_witness : exit_ok;
            o.summary = found ? "found: " + w.str() : "absent";
            return o;
        };
    });

    // verify-coloring
    std::string coloring_file;
    auto verify = app.add_subcommand("verify-coloring", "Check a coloring for monochromatic loose 3-paths");
    verify->add_option("file", coloring_file)->required();
    verify->callback([&] {
        parameters = {{"file", coloring_file}};
        action = [&] {
            auto c = load_coloring(coloring_file);
            int found = 0;
            OwnedString w;
            check(rl_find_mono_loose_path(c.get(), 3, &found, &w.p));
            Outcome o{found ? exit_witness : exit_ok, {{"monochromatic_path", found == 1}, {"witness", w.json_value()}}, {}};
            o.summary = found ? "monochromatic loose 3-path: " + w.str() : "no monochromatic loose 3-path";
            return o;
        };
    });

    // ramsey
    rl_search_options search{3, 2, 7, 0, 1, 0, 0};
    bool vertex_pruning = false, exhaustive = false;
    std::string witness_file;
    auto ramsey = app.add_subcommand("ramsey", "Decide whether every r-coloring of K^(k)_n has a monochromatic loose 3-path");
    ramsey->add_option("--k", search.k)->required();
    ramsey->add_option("--r", search.r)->required();
    ramsey->add_option("--n", search.n)->required();
    ramsey->add_option("--budget", search.budget, "Node budget, 0 = unlimited");
    ramsey->add_option("--threads", search.threads)->check(CLI::PositiveNumber);
    ramsey->add_flag("--vertex-pruning", vertex_pruning, "Also break vertex symmetry on the first edges");
    ramsey->add_flag("--exhaustive", exhaustive, "Use the unpruned enumeration oracle");
    ramsey->add_option("--witness,-o", witness_file, "Write the witness coloring here");
    ramsey->callback([&] {
        search.vertex_pruning = vertex_pruning;
        search.exhaustive = exhaustive;
        parameters = {{"k", search.k}, {"r", search.r}, {"n", search.n}, {"budget", search.budget},
            {"threads", search.threads}, {"vertex_pruning", vertex_pruning}, {"exhaustive", exhaustive}};
        action = [&] {
            rl_verdict verdict;
            OwnedString out;
            check(rl_decide_ramsey(&search, &verdict, &out.p));
            Outcome o{exit_for(verdict), out.json_value(), {}};
            if (! witness_file.empty() && o.result["witness"].is_string()) {
                write_file(witness_file, o.result["witness"].get<std::string>());
                o.result["witness_file"] = witness_file;
            }
            o.summary = "verdict " + o.result["verdict"].get<std::string>();
            return o;
        };
    });

    // turan
    int tk = 3, tn = 6;
    std::uint64_t tbudget = 0;
    int tthreads = 1;
    std::string tpattern = "loose-path-3", extremal_file;
    auto turan = app.add_subcommand("turan", "Maximum edges of a pattern-free k-graph on n vertices");
    turan->add_option("--k", tk)->required();
    turan->add_option("--n", tn)->required();
    turan->add_option("--pattern", tpattern)->check(CLI::IsMember({"loose-path-2", "loose-path-3"}));
    turan->add_option("--budget", tbudget);
    turan->add_option("--threads", tthreads)->check(CLI::PositiveNumber);
    turan->add_option("-o", extremal_file, "Write the extremal hypergraph here");
    turan->callback([&] {
        parameters = {{"k", tk}, {"n", tn}, {"pattern", tpattern}, {"budget", tbudget}, {"threads", tthreads}};
        action = [&] {
            rl_verdict status;
            OwnedString out;
            check(rl_turan_max_edges(tk, tn, tpattern.c_str(), tbudget, tthreads, &status, &out.p));
            Outcome o{exit_for(status), out.json_value(), {}};
            if (! extremal_file.empty()) {
                write_file(extremal_file, o.result["extremal"].get<std::string>());
                o.result["extremal_file"] = extremal_file;
            }
            o.summary = "max edges " + o.result["max_edges"].dump() + " (" + o.result["status"].get<std::string>() + ")";
            return o;
        };
    });

    // construct
    int ck = 3, cr = 2, cn = 0, center = 0;
    std::vector<int> pair{0, 1};
    std::string construct_out;
    auto construct = app.add_subcommand("construct", "Build an extremal object");
    construct->require_subcommand(1);
    auto star_clique = construct->add_subcommand("star-clique", "r-1 stars and one clique on r+3k-4 vertices");
    star_clique->add_option("--k", ck)->required();
    star_clique->add_option("--r", cr)->required();
    star_clique->add_option("-o", construct_out);
    star_clique->callback([&] {
        parameters = {{"object", "star-clique"}, {"k", ck}, {"r", cr}};
        action = [&] {
            rl_coloring * c = nullptr;
            check(rl_star_clique_coloring(ck, cr, &c));
            ColoringPtr owned(c, rl_coloring_free);
            Outcome o;
            deliver(o, "coloring", construct_out, text_of(c));
            o.summary = construct_out.empty() ? text_of(c) : "star-clique coloring on " + std::to_string(cr + 3 * ck - 4) + " vertices";
            return o;
        };
    });
    auto full = construct->add_subcommand("full-star", "All k-sets through one center");
    full->add_option("--k", ck)->required();
    full->add_option("--n", cn)->required();
    full->add_option("--center", center);
    full->add_option("-o", construct_out);
    full->callback([&] {
        parameters = {{"object", "full-star"}, {"k", ck}, {"n", cn}, {"center", center}};
        action = [&] {
            rl_hypergraph * h = nullptr;
            check(rl_full_star(cn, ck, center, &h));
            HypergraphPtr owned(h, rl_hypergraph_free);
            Outcome o;
            deliver(o, "hypergraph", construct_out, text_of(h));
            o.summary = construct_out.empty() ? text_of(h) : "full star with " + std::to_string(rl_hypergraph_edge_count(h)) + " edges";
            return o;
        };
    });
    auto cover = construct->add_subcommand("pair-cover", "All k-sets through a fixed pair");
    cover->add_option("--k", ck)->required();
    cover->add_option("--n", cn)->required();
    cover->add_option("--pair", pair)->expected(2);
    cover->add_option("-o", construct_out);
    cover->callback([&] {
        parameters = {{"object", "pair-cover"}, {"k", ck}, {"n", cn}, {"pair", pair}};
        action = [&] {
            rl_hypergraph * h = nullptr;
            check(rl_pair_cover(cn, ck, pair.at(0), pair.at(1), &h));
            HypergraphPtr owned(h, rl_hypergraph_free);
            Outcome o;
            deliver(o, "hypergraph", construct_out, text_of(h));
            o.summary = construct_out.empty() ? text_of(h) : "pair cover with " + std::to_string(rl_hypergraph_edge_count(h)) + " edges";
            return o;
        };
    });

    // cnf
    int fk = 2, fr = 2, fn = 4;
    std::string cnf_out;
    auto cnf = app.add_subcommand("cnf", "Export the Ramsey instance as DIMACS CNF");
    cnf->add_option("--k", fk)->required();
    cnf->add_option("--r", fr)->required();
    cnf->add_option("--n", fn)->required();
    cnf->add_option("-o", cnf_out)->required();
    cnf->callback([&] {
        parameters = {{"k", fk}, {"r", fr}, {"n", fn}};
        action = [&] {
            OwnedString text;
            size_t vars = 0, clauses = 0;
            check(rl_export_cnf(fk, fr, fn, &text.p, &vars, &clauses));
            write_file(cnf_out, text.str());
            Outcome o{exit_ok, {{"variables", vars}, {"clauses", clauses}, {"file", cnf_out}}, {}};
            o.summary = std::to_string(vars) + " variables, " + std::to_string(clauses) + " clauses";
            return o;
        };
    });

    // constants
    int qk = 250;
    long qa = 250;
    std::vector<long> r_list;
    auto constants = app.add_subcommand("constants", "Check the constant inequalities of the upper-bound proof");
    constants->add_option("--k", qk)->required();
    constants->add_option("--A", qa);
    constants->add_option("--r-list", r_list)->delimiter(',');
    constants->callback([&] {
        parameters = {{"k", qk}, {"A", qa}, {"r_list", r_list}};
        action = [&] {
            rl_verdict verdict;
            OwnedString out;
            check(rl_verify_constant_inequalities(qk, qa, r_list.data(), r_list.size(), &verdict, &out.p));
            Outcome o{exit_for(verdict), out.json_value(), {}};
            for (auto & rec : o.result)
                o.summary += rec["name"].get<std::string>() + " " + rec["params"].dump() + ": " + rec["holds"].get<std::string>() + "\n";
            o.summary.pop_back();
            return o;
        };
    });

    // bounds
    int bk = 3, br = 2;
    auto bounds = app.add_subcommand("bounds", "Closed-form Ramsey bounds");
    bounds->add_option("--k", bk)->required();
    bounds->add_option("--r", br)->required();
    bounds->callback([&] {
        parameters = {{"k", bk}, {"r", br}};
        action = [&] {
            OwnedString out;
            check(rl_ramsey_bounds(bk, br, &out.p));
            return Outcome{exit_ok, out.json_value(), out.str()};
        };
    });

    // machinery
    std::string minput, mb, mprecision = "1e-9";
    int mk = 3, mn = 10;
    auto machinery = app.add_subcommand("machinery", "Constructive proof steps");
    machinery->require_subcommand(1);
    auto file_step = [&](const char * name, const char * help, auto run) {
        auto sub = machinery->add_subcommand(name, help);
        sub->add_option("--input", minput)->required();
        sub->callback([&, name, run] {
            parameters = {{"step", name}, {"input", minput}};
            action = [&, run] { return run(); };
        });
    };
    file_step("peel", "Subhypergraph with minimum degree above |E|/|V|", [&] {
        auto h = load_hypergraph(minput);
        rl_hypergraph * g = nullptr;
        check(rl_peel_min_degree(h.get(), &g));
        HypergraphPtr owned(g, rl_hypergraph_free);
        Outcome o{exit_ok, {{"hypergraph", text_of(g)}, {"edges", rl_hypergraph_edge_count(g)}}, {}};
        o.summary = text_of(g);
        return o;
    });
    auto json_step = [&](const char * name, const char * help, rl_status (*fn)(const char *, char **)) {
        file_step(name, help, [&, fn] {
            OwnedString out;
            check(fn(read_file(minput).c_str(), &out.p));
            return Outcome{exit_ok, out.json_value(), out.str()};
        });
    };
    json_step("prune", "Bipartite subgraph meeting the per-class degree bounds", rl_prune_bipartite);
    json_step("tripartition", "Greedy three-way split of weighted vertices", rl_greedy_tripartition);
    json_step("split", "Derandomized U1/U2 split by conditional expectations", rl_derandomized_split);
    file_step("stability", "Max-degree vertex and its deficiency", [&] {
        auto h = load_hypergraph(minput);
        OwnedString out;
        check(rl_stability_deficiency(h.get(), &out.p));
        return Outcome{exit_ok, out.json_value(), out.str()};
    });
    auto root_step = [&](const char * name, const char * help, rl_status (*fn)(const char *, int, int, const char *, char **)) {
        auto sub = machinery->add_subcommand(name, help);
        sub->add_option("--b", mb)->required();
        sub->add_option("--k", mk)->required();
        sub->add_option("--n", mn)->required();
        sub->add_option("--precision", mprecision);
        sub->callback([&, name, fn] {
            parameters = {{"step", name}, {"b", mb}, {"k", mk}, {"n", mn}, {"precision", mprecision}};
            action = [&, fn] {
                OwnedString out;
                check(fn(mb.c_str(), mk, mn, mprecision.c_str(), &out.p));
                return Outcome{exit_ok, out.json_value(), out.str()};
            };
        });
    };
    root_step("prop32", "Enclosure of (1-(b/(k-1))^(1/(k-2)))^(k-1) C(n-1,k-1)", rl_prop32_deficiency_bound);
    root_step("claim-mm", "Enclosure of (b/(k-1))^(1/(k-2)) (n-1)", rl_claim_mm_lower_bound);

    // paths
    int pn = 7, pk = 3, plength = 3;
    auto paths = app.add_subcommand("paths", "Enumerate loose path copies in K^(k)_n");
    paths->add_option("--n", pn)->required();
    paths->add_option("--k", pk)->required();
    paths->add_option("--length", plength)->check(CLI::IsMember({2, 3}));
    paths->callback([&] {
        parameters = {{"n", pn}, {"k", pk}, {"length", plength}};
        action = [&] {
            size_t count = 0;
            OwnedString out;
            check(rl_enumerate_loose_paths(pn, pk, plength, &count, &out.p));
            return Outcome{exit_ok, {{"count", count}, {"copies", out.json_value()}}, std::to_string(count) + " copies"};
        };
    });

    // hypergraph utilities
    std::string hinput, hout;
    int hv = 0, hn = 5, hk = 3;
    std::vector<int> hremove;
    auto hyper = app.add_subcommand("hypergraph", "Basic hypergraph operators");
    hyper->require_subcommand(1);
    auto emit_graph = [&](Outcome & o, rl_hypergraph * g) {
        HypergraphPtr owned(g, rl_hypergraph_free);
        deliver(o, "hypergraph", hout, text_of(g));
        o.summary = hout.empty() ? text_of(g) : "wrote " + hout;
    };
    auto complete = hyper->add_subcommand("complete", "Complete k-graph");
    complete->add_option("--n", hn)->required();
    complete->add_option("--k", hk)->required();
    complete->add_option("-o", hout);
    complete->callback([&] {
        parameters = {{"op", "complete"}, {"n", hn}, {"k", hk}};
        action = [&] {
            rl_hypergraph * g = nullptr;
            check(rl_hypergraph_complete(hn, hk, &g));
            Outcome o;
            emit_graph(o, g);
            return o;
        };
    });
    auto describe = hyper->add_subcommand("describe", "Degrees and maximum degree");
    describe->add_option("--input", hinput)->required();
    describe->callback([&] {
        parameters = {{"op", "describe"}, {"input", hinput}};
        action = [&] {
            auto h = load_hypergraph(hinput);
            OwnedString out;
            check(rl_hypergraph_describe(h.get(), &out.p));
            return Outcome{exit_ok, out.json_value(), out.str()};
        };
    });
    auto link_cmd = hyper->add_subcommand("link", "Link of a vertex");
    link_cmd->add_option("--input", hinput)->required();
    link_cmd->add_option("--vertex", hv)->required();
    link_cmd->add_option("-o", hout);
    link_cmd->callback([&] {
        parameters = {{"op", "link"}, {"input", hinput}, {"vertex", hv}};
        action = [&] {
            auto h = load_hypergraph(hinput);
            rl_hypergraph * g = nullptr;
            check(rl_hypergraph_link(h.get(), hv, &g));
            Outcome o;
            emit_graph(o, g);
            return o;
        };
    });
    auto shadow_cmd = hyper->add_subcommand("shadow", "All (k-1)-sets inside some edge");
    shadow_cmd->add_option("--input", hinput)->required();
    shadow_cmd->add_option("-o", hout);
    shadow_cmd->callback([&] {
        parameters = {{"op", "shadow"}, {"input", hinput}};
        action = [&] {
            auto h = load_hypergraph(hinput);
            rl_hypergraph * g = nullptr;
            check(rl_hypergraph_shadow(h.get(), &g));
            Outcome o;
            emit_graph(o, g);
            return o;
        };
    });
    auto mult = hyper->add_subcommand("multiplicity", "Shadow sets with the number of edges containing them");
    mult->add_option("--input", hinput)->required();
    mult->callback([&] {
        parameters = {{"op", "multiplicity"}, {"input", hinput}};
        action = [&] {
            auto h = load_hypergraph(hinput);
            OwnedString out;
            check(rl_hypergraph_shadow_multiplicity(h.get(), &out.p));
            return Outcome{exit_ok, out.json_value(), out.str()};
        };
    });
    auto remove = hyper->add_subcommand("remove", "Induced subhypergraph without the given vertices");
    remove->add_option("--input", hinput)->required();
    remove->add_option("--vertices", hremove)->delimiter(',');
    remove->add_option("-o", hout);
    remove->callback([&] {
        parameters = {{"op", "remove"}, {"input", hinput}, {"vertices", hremove}};
        action = [&] {
            auto h = load_hypergraph(hinput);
            rl_hypergraph * g = nullptr;
            check(rl_hypergraph_remove_vertices(h.get(), hremove.data(), hremove.size(), &g));
            Outcome o;
            emit_graph(o, g);
            return o;
        };
    });

    // property-suite
    int pcount = 1000;
    auto suite = app.add_subcommand("property-suite", "Seeded random checks of the machinery postconditions");
    suite->add_option("--seed", seed, "Defaults to $RAMSEYLAB_SEED");
    suite->add_option("--count", pcount, "Instances per property")->check(CLI::NonNegativeNumber);
    suite->callback([&] {
        seeded = true;
        parameters = {{"count", pcount}};
        action = [&] {
            rl_verdict verdict;
            OwnedString out;
            check(rl_machinery_property_suite(seed, pcount, &verdict, &out.p));
            Outcome o{exit_for(verdict), out.json_value(), {}};
            for (auto & p : o.result["properties"])
                o.summary += p["property"].get<std::string>() + ": " + std::to_string(p["failures"].get<int>()) + " failures in " +
                    std::to_string(p["instances"].get<int>()) + "\n";
            o.summary.pop_back();
            return o;
        };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    std::string command;
    for (auto * sub = app.get_subcommands().front(); sub; sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front())
        command += (command.empty() ? "" : " ") + sub->get_name();

    try {
        auto start = std::chrono::steady_clock::now();
        Outcome o = action();
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (as_json) {
            json report{{"command", command}, {"parameters", parameters}, {"exit_code", o.code}};
            // search statistics depend on timing under threads, so they stay out of the payload
            if (o.result.is_object() && o.result.contains("stats")) {
                report["stats"] = o.result["stats"];
                o.result.erase("stats");
            }
            report["timing"]["wall_seconds"] = wall;
            report["result"] = o.result;
            if (seeded)
                report["seed"] = seed;
            std::cout << report.dump(2) << '\n';
        }
        else if (! o.summary.empty())
            std::cout << o.summary << (o.summary.back() == '\n' ? "" : "\n");
        return o.code;
    }
    catch (const Failure & f) {
        std::cerr << "ramseylab: " << f.message << '\n';
        return f.code;
    }
    catch (const std::exception & e) {
        std::cerr << "ramseylab: " << e.what() << '\n';
        return exit_internal;
    }
}
