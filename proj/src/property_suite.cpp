#include <ramseylab/machinery.hpp>
#include <ramseylab/property_suite.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace ramseylab
{
    namespace
    {
        using Rng = std::mt19937_64;

        auto uniform(Rng & rng, int lo, int hi) -> int
        {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        }

        auto random_hypergraph(Rng & rng) -> Hypergraph
        {
            int k = uniform(rng, 2, 5);
            int n = uniform(rng, k, 20);
            double density = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
            // sample edges directly; the edge count of K^(5)_20 makes full scans wasteful
            int target = std::max(1, static_cast<int>(density * 4 * n));
            std::set<Edge> edges;
            std::vector<int> vertices(n);
            for (int i = 0; i < n; ++i)
                vertices[i] = i;
            for (int i = 0; i < target; ++i) {
                std::shuffle(vertices.begin(), vertices.end(), rng);
                Edge e(vertices.begin(), vertices.begin() + k);
                std::sort(e.begin(), e.end());
                edges.insert(std::move(e));
            }
            return Hypergraph(k, n, {edges.begin(), edges.end()});
        }

        auto check_peel(const Hypergraph & h) -> std::string
        {
            auto g = peel_min_degree(h);
            if (g.empty())
                return "empty result";
            for (auto & e : g.edges())
                if (! h.contains(e))
                    return "result is not a subhypergraph";
            std::vector<long> deg(h.vertex_count(), 0);
            for (auto & e : g.edges())
                for (auto v : e)
                    ++deg[v];
            for (int v = 0; v < h.vertex_count(); ++v)
                if (deg[v] > 0 && Rational(deg[v]) <= ratio(static_cast<long>(h.edge_count()), h.vertex_count()))
                    return "vertex " + std::to_string(v) + " has degree at most |E|/|V|";
            return {};
        }

        auto random_bipartite(Rng & rng) -> BipartiteGraph
        {
            BipartiteGraph b;
            int left = uniform(rng, 1, 20), right = uniform(rng, 1, 20);
            for (int i = 0; i < left; ++i)
                b.left.push_back(i);
            for (int i = 0; i < right; ++i)
                b.right.push_back(100 + i);
            double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
            std::bernoulli_distribution coin(density);
            for (auto l : b.left)
                for (auto r : b.right)
                    if (coin(rng))
                        b.edges.emplace_back(l, r);
            if (b.edges.empty()) {
                int l = b.left[uniform(rng, 0, left - 1)];
                int r = b.right[uniform(rng, 0, right - 1)];
                b.edges.emplace_back(l, r);
            }
            return b;
        }

        auto check_prune(const BipartiteGraph & b) -> std::string
        {
            auto g = prune_bipartite(b);
            if (g.edges.empty())
                return "empty result";
            std::set<std::pair<int, int>> original(b.edges.begin(), b.edges.end());
            std::map<int, long> left_deg, right_deg;
            for (auto & e : g.edges) {
                if (! original.count(e))
                    return "edge not in the input";
                ++left_deg[e.first];
                ++right_deg[e.second];
            }
            Rational total(static_cast<long>(b.edges.size()));
            Rational left_threshold = total / (2 * static_cast<long>(b.left.size()));
            Rational right_threshold = total / (2 * static_cast<long>(b.right.size()));
            for (auto v : g.left)
                if (Rational(left_deg[v]) < left_threshold)
                    return "left vertex " + std::to_string(v) + " below threshold";
            for (auto v : g.right)
                if (Rational(right_deg[v]) < right_threshold)
                    return "right vertex " + std::to_string(v) + " below threshold";
            return {};
        }

        auto random_weights(Rng & rng) -> WeightedVertices
        {
            WeightedVertices w;
            int count = uniform(rng, 0, 20);
            for (int i = 0; i < count; ++i) {
                int v = uniform(rng, 0, 40);
                int num = uniform(rng, 0, 1000);
                int den = uniform(rng, 1, 60);
                w[v] = ratio(num, den);
            }
            return w;
        }

        auto check_tripartition(const WeightedVertices & w) -> std::string
        {
            auto t = greedy_tripartition(w);
            std::set<int> seen;
            Rational max_weight = 0;
            for (auto & [v, x] : w)
                max_weight = std::max(max_weight, x);
            for (int i = 0; i < 3; ++i) {
                Rational sum = 0;
                for (auto v : t.parts[i]) {
                    if (! w.count(v) || ! seen.insert(v).second)
                        return "parts are not a partition of the support";
                    sum += w.at(v);
                }
                if (sum != t.sums[i])
                    return "reported part sum is wrong";
            }
            if (seen.size() != w.size())
                return "parts do not cover the support";
            auto [lo, hi] = std::minmax({t.sums[0], t.sums[1], t.sums[2]});
            if (hi - lo > max_weight)
                return "gap exceeds the maximum weight";
            return {};
        }

        struct SplitInstance
        {
            int n, k;
            std::vector<ApexAssignment> assignments;
        };

        auto random_split(Rng & rng) -> SplitInstance
        {
            SplitInstance s;
            s.k = uniform(rng, 2, 5);
            s.n = uniform(rng, s.k, 20);
            int count = uniform(rng, 0, 60);
            std::set<Edge> used;
            std::vector<int> vertices(s.n);
            for (int i = 0; i < s.n; ++i)
                vertices[i] = i;
            for (int i = 0; i < count; ++i) {
                std::shuffle(vertices.begin(), vertices.end(), rng);
                Edge f(vertices.begin(), vertices.begin() + (s.k - 1));
                std::sort(f.begin(), f.end());
                if (used.insert(f).second)
                    s.assignments.push_back({f, vertices[s.k - 1]});
            }
            return s;
        }

        auto check_split(const SplitInstance & s) -> std::string
        {
            auto split = derandomized_split(s.assignments, s.n, s.k);
            std::vector<int> side(s.n, 0);
            for (auto v : split.u1)
                side[v] += 1;
            for (auto v : split.u2)
                side[v] += 2;
            if (std::any_of(side.begin(), side.end(), [](int x) { return x != 1 && x != 2; }))
                return "U1, U2 do not partition the vertices";
            std::size_t proper = 0;
            for (auto & a : s.assignments)
                if (side[a.apex] == 1 && std::all_of(a.set.begin(), a.set.end(), [&](int u) { return side[u] == 2; }))
                    ++proper;
            if (proper != split.proper_count)
                return "reported proper count is wrong";
            // |F| (1/k) ((k-1)/k)^(k-1), by repeated multiplication
            Rational expectation = ratio(static_cast<long>(s.assignments.size()), s.k);
            for (int i = 0; i < s.k - 1; ++i)
                expectation *= ratio(s.k - 1, s.k);
            if (expectation != split.expectation)
                return "reported expectation is wrong";
            if (Rational(static_cast<long>(proper)) < expectation)
                return "proper count below the expectation";
            return {};
        }

        template <typename Make, typename Check>
        auto run(std::string name, Rng & rng, int count, Make && make, Check && check) -> PropertyResult
        {
            PropertyResult result{std::move(name), 0, 0, {}};
            for (int i = 0; i < count; ++i) {
                auto instance = make(rng);
                std::string problem;
                try {
                    problem = check(instance);
                }
                catch (const std::exception & e) {
                    problem = std::string("threw: ") + e.what();
                }
                ++result.instances;
                if (! problem.empty()) {
                    if (result.failures++ == 0)
                        result.first_failure = "instance " + std::to_string(i) + ": " + problem;
                }
            }
            return result;
        }
    }

    auto run_machinery_properties(std::uint64_t seed, int count) -> std::vector<PropertyResult>
    {
        // one stream per property so adding instances to one leaves the others unchanged
        Rng peel_rng(seed), prune_rng(seed + 1), tri_rng(seed + 2), split_rng(seed + 3);
        return {
            run("peel_min_degree", peel_rng, count, random_hypergraph, check_peel),
            run("prune_bipartite", prune_rng, count, random_bipartite, check_prune),
            run("greedy_tripartition", tri_rng, count, random_weights, check_tripartition),
            run("derandomized_split", split_rng, count, random_split, check_split),
        };
    }
}
