#include "mask_index.hpp"

#include <ramseylab/combinatorics.hpp>
#include <ramseylab/constructions.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/search.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace ramseylab
{
    using detail::IncidenceIndex;
    using detail::Mask;

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto seconds_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }

        auto lex_edges(int n, int k) -> std::vector<Edge>
        {
            std::vector<Edge> edges;
            for_each_subset(n, k, [&](std::span<const int> s) {
                edges.emplace_back(s.begin(), s.end());
                return true;
            });
            return edges;
        }

        auto to_mask(const Edge & e) -> Mask
        {
            Mask m = 0;
            for (auto v : e)
                m |= detail::bit(v);
            return m;
        }

        void check_search_parameters(int k, int r, int n)
        {
            if (k < 2 || r < 1 || n < k)
                fail(ErrorCode::invalid_parameters, "search needs k >= 2, r >= 1 and n >= k");
            if (n > max_search_vertices)
                fail(ErrorCode::invalid_parameters, "search supports at most 64 vertices");
            binomial(n, k);
        }

        /// Runs task(i) for i in [0, count) on up to `threads` workers, in
        /// increasing order of i per worker pickup.
        template <typename Task>
        void run_tasks(std::size_t count, int threads, Task && task)
        {
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                for (auto i = next++; i < count; i = next++)
                    task(i);
            };
            std::vector<std::jthread> pool;
            for (int t = 1; t < threads; ++t)
                pool.emplace_back(worker);
            worker();
        }

        constexpr std::size_t no_witness = std::numeric_limits<std::size_t>::max();

        struct SharedSearchState
        {
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<std::uint64_t> prunes{0};
            std::atomic<bool> out_of_budget{false};
            std::atomic<std::size_t> best_task{no_witness};
        };

        class RamseyEngine
        {
        public:
            enum class Result { found, exhausted, aborted };

            RamseyEngine(const SearchOptions & options, const std::vector<Mask> & edges, SharedSearchState & shared, std::size_t task) :
                options_(options),
                edges_(edges),
                shared_(shared),
                task_(task),
                colors_(edges.size(), 0),
                sorted_prefix_(options.vertex_pruning ? options.n - options.k + 1 : 0)
            {
                for (int c = 0; c < options.r; ++c)
                    classes_.emplace_back(options.n);
            }

            /// Replays a precomputed color prefix (already checked when built).
            auto replay(const std::vector<int> & prefix) -> int
            {
                int used = 0;
                for (std::size_t i = 0; i < prefix.size(); ++i) {
                    colors_[i] = prefix[i];
                    classes_[prefix[i] - 1].add(edges_[i]);
                    used = std::max(used, prefix[i]);
                }
                return used;
            }

            auto search(std::size_t index, int used) -> Result
            {
                if (index == edges_.size())
                    return Result::found;
                if (shared_.best_task.load(std::memory_order_relaxed) < task_ || shared_.out_of_budget.load(std::memory_order_relaxed))
                    return Result::aborted;
                int top = std::min(options_.r, used + 1);
                for (int c = 1; c <= top; ++c) {
                    if (index > 0 && index < sorted_prefix_ && c < colors_[index - 1])
                        continue;
                    auto nodes = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                    if (options_.budget && nodes > options_.budget) {
                        shared_.out_of_budget = true;
                        return Result::aborted;
                    }
                    auto & cls = classes_[c - 1];
                    if (cls.closes_path3(edges_[index])) {
                        shared_.prunes.fetch_add(1, std::memory_order_relaxed);
                        continue;
                    }
                    cls.add(edges_[index]);
                    colors_[index] = c;
                    auto result = search(index + 1, std::max(used, c));
                    if (result == Result::found)
                        return result;
                    cls.remove_last(edges_[index]);
                    colors_[index] = 0;
                    if (result == Result::aborted)
                        return result;
                }
                return Result::exhausted;
            }

            /// Collects every admissible color prefix of the given depth.
            void collect_prefixes(std::size_t index, int used, std::size_t depth, std::vector<std::vector<int>> & out)
            {
                if (index == depth) {
                    out.emplace_back(colors_.begin(), colors_.begin() + depth);
                    return;
                }
                int top = std::min(options_.r, used + 1);
                for (int c = 1; c <= top; ++c) {
                    if (index > 0 && index < sorted_prefix_ && c < colors_[index - 1])
                        continue;
                    shared_.nodes.fetch_add(1, std::memory_order_relaxed);
                    auto & cls = classes_[c - 1];
                    if (cls.closes_path3(edges_[index])) {
                        shared_.prunes.fetch_add(1, std::memory_order_relaxed);
                        continue;
                    }
                    cls.add(edges_[index]);
                    colors_[index] = c;
                    collect_prefixes(index + 1, std::max(used, c), depth, out);
                    cls.remove_last(edges_[index]);
                    colors_[index] = 0;
                }
            }

            auto colors() const -> const std::vector<int> & { return colors_; }

        private:
            const SearchOptions & options_;
            const std::vector<Mask> & edges_;
            SharedSearchState & shared_;
            std::size_t task_;
            std::vector<IncidenceIndex> classes_;
            std::vector<int> colors_;
            std::size_t sorted_prefix_;
        };

        auto checked_witness(const SearchOptions & o, const std::vector<int> & colors) -> Coloring
        {
            Coloring witness(o.k, o.n, o.r, colors);
            if (find_mono_loose_path(witness, 3))
                fail(ErrorCode::internal_error, "search produced a coloring with a monochromatic loose path");
            return witness;
        }
    }

    auto to_string(RamseyVerdict v) -> std::string
    {
        switch (v) {
            case RamseyVerdict::holds: return "holds";
            case RamseyVerdict::fails: return "fails";
            case RamseyVerdict::unknown: return "unknown";
        }
        return "unknown";
    }

    auto decide_ramsey(const SearchOptions & options) -> SearchOutcome
    {
        check_search_parameters(options.k, options.r, options.n);
        if (options.threads < 1)
            fail(ErrorCode::invalid_parameters, "threads must be at least 1");
        auto start = Clock::now();

        std::vector<Mask> edges;
        for (auto & e : lex_edges(options.n, options.k))
            edges.push_back(to_mask(e));

        SharedSearchState shared;
        SearchOutcome outcome{RamseyVerdict::holds, std::nullopt, {}};

        if (options.threads == 1) {
            RamseyEngine engine(options, edges, shared, 0);
            auto result = engine.search(0, 0);
            if (result == RamseyEngine::Result::found) {
                outcome.verdict = RamseyVerdict::fails;
                outcome.witness = checked_witness(options, engine.colors());
            }
            else if (result == RamseyEngine::Result::aborted)
                outcome.verdict = RamseyVerdict::unknown;
        }
        else {
            // split by color prefixes; a deeper prefix gives more, smaller tasks
            std::vector<std::vector<int>> prefixes;
            std::size_t depth = 0;
            while (depth < edges.size()) {
                ++depth;
                SharedSearchState scratch;
                RamseyEngine builder(options, edges, scratch, 0);
                prefixes.clear();
                builder.collect_prefixes(0, 0, depth, prefixes);
                if (prefixes.size() >= static_cast<std::size_t>(8 * options.threads) || prefixes.empty())
                    break;
            }

            std::vector<std::vector<int>> found(prefixes.size());
            std::mutex found_mutex;
            run_tasks(prefixes.size(), options.threads, [&](std::size_t i) {
                if (shared.best_task.load() < i || shared.out_of_budget.load())
                    return;
                RamseyEngine engine(options, edges, shared, i);
                int used = engine.replay(prefixes[i]);
                if (engine.search(prefixes[i].size(), used) == RamseyEngine::Result::found) {
                    {
                        std::lock_guard lock(found_mutex);
                        found[i] = engine.colors();
                    }
                    auto current = shared.best_task.load();
                    while (i < current && ! shared.best_task.compare_exchange_weak(current, i))
                        ;
                }
            });

            auto best = shared.best_task.load();
            if (best != no_witness) {
                outcome.verdict = RamseyVerdict::fails;
                outcome.witness = checked_witness(options, found[best]);
            }
            else if (shared.out_of_budget)
                outcome.verdict = RamseyVerdict::unknown;
        }

        outcome.stats.nodes = shared.nodes;
        outcome.stats.prunes = shared.prunes;
        outcome.stats.wall_seconds = seconds_since(start);
        return outcome;
    }

    auto exhaustive_decide(int k, int r, int n) -> SearchOutcome
    {
        check_search_parameters(k, r, n);
        auto start = Clock::now();
        auto edges = lex_edges(n, k);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (total > exhaustive_limit / static_cast<std::uint64_t>(r))
                throw Error(ErrorCode::too_large, "r^C(n,k) exceeds the exhaustive limit of 1e8 colorings");
            total *= static_cast<std::uint64_t>(r);
        }

        std::vector<std::array<std::size_t, 3>> paths;
        for (auto & copy : enumerate_loose_paths(n, k, 3))
            paths.push_back({lex_rank(copy[0], n), lex_rank(copy[1], n), lex_rank(copy[2], n)});

        SearchOutcome outcome{RamseyVerdict::holds, std::nullopt, {}};
        // colorings in odometer order, last edge fastest, colors 0-based
        std::vector<int> colors(edges.size(), 0);
        for (std::uint64_t count = 0; count < total; ++count) {
            ++outcome.stats.nodes;
            bool mono = std::any_of(paths.begin(), paths.end(), [&](auto & p) {
                return colors[p[0]] == colors[p[1]] && colors[p[1]] == colors[p[2]];
            });
            if (! mono) {
                std::vector<int> assignment(colors.size());
                std::transform(colors.begin(), colors.end(), assignment.begin(), [](int c) { return c + 1; });
                outcome.verdict = RamseyVerdict::fails;
                outcome.witness = Coloring(k, n, r, std::move(assignment));
                break;
            }
            for (std::size_t i = colors.size(); i-- > 0;) {
                if (++colors[i] < r)
                    break;
                colors[i] = 0;
            }
        }
        outcome.stats.wall_seconds = seconds_since(start);
        return outcome;
    }

    auto to_string(Pattern p) -> std::string
    {
        return p == Pattern::loose_path_3 ? "loose-path-3" : "loose-path-2";
    }

    auto parse_pattern(std::string_view name) -> Pattern
    {
        if (name == "loose-path-3")
            return Pattern::loose_path_3;
        if (name == "loose-path-2")
            return Pattern::loose_path_2;
        fail(ErrorCode::invalid_parameters, "unknown pattern '" + std::string(name) + "'");
    }

    auto path_length(Pattern p) -> int
    {
        return p == Pattern::loose_path_3 ? 3 : 2;
    }

    auto to_string(TuranStatus s) -> std::string
    {
        return s == TuranStatus::exact ? "exact" : "lower-bound-only";
    }

    namespace
    {
        struct SharedTuranState
        {
            std::atomic<std::uint64_t> nodes{0};
            std::atomic<std::uint64_t> prunes{0};
            std::atomic<bool> out_of_budget{false};
            // (size << 32) | ~position: larger size wins, then the earlier task;
            // position 0 is the seed, task i has position i + 1
            std::atomic<std::uint64_t> best{0};

            static auto key(std::size_t size, std::uint32_t position) -> std::uint64_t
            {
                return std::uint64_t{size} << 32 | (0xFFFFFFFFu - position);
            }
        };

        class TuranEngine
        {
        public:
            TuranEngine(const std::vector<Mask> & edges, int n, Pattern pattern, std::uint64_t budget, SharedTuranState & shared,
                std::uint32_t position) :
                edges_(edges),
                index_(n),
                pattern_(pattern),
                budget_(budget),
                shared_(shared),
                position_(position)
            {
            }

            auto admissible(Mask e) const -> bool
            {
                return pattern_ == Pattern::loose_path_3 ? ! index_.closes_path3(e) : ! index_.closes_path2(e);
            }

            /// Applies include/exclude decisions; false if an include is not admissible.
            auto replay(const std::vector<char> & decisions) -> bool
            {
                for (std::size_t i = 0; i < decisions.size(); ++i)
                    if (decisions[i]) {
                        if (! admissible(edges_[i]))
                            return false;
                        index_.add(edges_[i]);
                        chosen_.push_back(i);
                    }
                return true;
            }

            void search(std::size_t index)
            {
                if (shared_.out_of_budget.load(std::memory_order_relaxed))
                    return;
                auto nodes = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                if (budget_ && nodes > budget_) {
                    shared_.out_of_budget = true;
                    return;
                }
                auto count = chosen_.size();
                if (count > best_local_.size())
                    record();
                if (index == edges_.size())
                    return;
                // ties only matter against later tasks
                auto bound = count + (edges_.size() - index);
                if (SharedTuranState::key(bound, position_) <= shared_.best.load(std::memory_order_relaxed)) {
                    shared_.prunes.fetch_add(1, std::memory_order_relaxed);
                    return;
                }
                if (admissible(edges_[index])) {
                    index_.add(edges_[index]);
                    chosen_.push_back(index);
                    search(index + 1);
                    chosen_.pop_back();
                    index_.remove_last(edges_[index]);
                }
                search(index + 1);
            }

            auto best_found() const -> const std::vector<std::size_t> & { return best_local_; }

        private:
            void record()
            {
                best_local_ = chosen_;
                auto mine = SharedTuranState::key(chosen_.size(), position_);
                auto current = shared_.best.load();
                while (mine > current && ! shared_.best.compare_exchange_weak(current, mine))
                    ;
            }

            const std::vector<Mask> & edges_;
            IncidenceIndex index_;
            Pattern pattern_;
            std::uint64_t budget_;
            SharedTuranState & shared_;
            std::uint32_t position_;
            std::vector<std::size_t> chosen_;
            std::vector<std::size_t> best_local_;
        };
    }

    auto turan_max_edges(int k, int n, Pattern pattern, std::uint64_t budget, int threads) -> TuranResult
    {
        check_search_parameters(k, 1, n);
        if (threads < 1)
            fail(ErrorCode::invalid_parameters, "threads must be at least 1");
        auto start = Clock::now();
        auto edge_list = lex_edges(n, k);
        std::vector<Mask> edges;
        for (auto & e : edge_list)
            edges.push_back(to_mask(e));

        // a known pattern-free seed: full star for 3-paths, pair cover (or one edge) for 2-paths
        Hypergraph seed = pattern == Pattern::loose_path_3 ? full_star(n, k, 0)
            : (k >= 3 ? pair_cover(n, k, 0, 1) : Hypergraph(k, n, {{0, 1}}));
        if (find_loose_path(seed, path_length(pattern)))
            fail(ErrorCode::internal_error, "Turan seed contains the forbidden pattern");

        SharedTuranState shared;
        shared.best = SharedTuranState::key(seed.edge_count(), 0);

        std::vector<std::vector<char>> prefixes{{}};
        if (threads > 1) {
            std::size_t depth = 0;
            while (prefixes.size() < static_cast<std::size_t>(8 * threads) && depth < edges.size()) {
                std::vector<std::vector<char>> next;
                for (auto & p : prefixes)
                    for (char include : {1, 0}) {
                        auto q = p;
                        q.push_back(include);
                        next.push_back(std::move(q));
                    }
                prefixes = std::move(next);
                ++depth;
            }
        }

        std::vector<std::vector<std::size_t>> found(prefixes.size());
        run_tasks(prefixes.size(), threads, [&](std::size_t i) {
            TuranEngine engine(edges, n, pattern, budget, shared, static_cast<std::uint32_t>(i + 1));
            if (! engine.replay(prefixes[i]))
                return;
            engine.search(prefixes[i].size());
            found[i] = engine.best_found();
        });

        const std::vector<std::size_t> * best = nullptr;
        for (auto & f : found)
            if (f.size() > seed.edge_count() && (! best || f.size() > best->size()))
                best = &f;

        Hypergraph extremal = seed;
        if (best) {
            std::vector<Edge> chosen;
            for (auto i : *best)
                chosen.push_back(edge_list[i]);
            extremal = Hypergraph(k, n, std::move(chosen));
        }
        if (find_loose_path(extremal, path_length(pattern)))
            fail(ErrorCode::internal_error, "Turan search produced a hypergraph containing the pattern");

        TuranResult result{shared.out_of_budget ? TuranStatus::lower_bound_only : TuranStatus::exact,
            extremal.edge_count(), std::move(extremal), {}};
        result.stats.nodes = shared.nodes;
        result.stats.prunes = shared.prunes;
        result.stats.wall_seconds = seconds_since(start);
        return result;
    }

    auto enumerate_loose_paths(int n, int k, int length) -> std::vector<PathCopy>
    {
        if (k < 2 || n < 1)
            fail(ErrorCode::invalid_parameters, "path enumeration needs k >= 2 and n >= 1");
        if (length != 2 && length != 3)
            fail(ErrorCode::invalid_parameters, "loose path length must be 2 or 3");
        std::vector<PathCopy> copies;
        if (n < k)
            return copies;

        auto outside = [n](const std::vector<const Edge *> & used) {
            std::vector<int> pool;
            for (int v = 0; v < n; ++v)
                if (std::none_of(used.begin(), used.end(), [v](const Edge * e) { return std::binary_search(e->begin(), e->end(), v); }))
                    pool.push_back(v);
            return pool;
        };
        auto extend = [](Vertex anchor, std::span<const int> rest) {
            Edge e(rest.begin(), rest.end());
            e.insert(std::upper_bound(e.begin(), e.end(), anchor), anchor);
            return e;
        };

        for (auto & first : lex_edges(n, k)) {
            if (length == 2) {
                auto pool = outside({&first});
                for (auto a : first)
                    for_each_subset_of(pool, k - 1, [&](std::span<const int> rest) {
                        auto second = extend(a, rest);
                        if (first < second)
                            copies.push_back({first, second});
                        return true;
                    });
                continue;
            }
            // `first` plays the middle edge here
            auto & middle = first;
            auto pool1 = outside({&middle});
            for (auto a : middle)
                for (auto b : middle) {
                    if (a == b)
                        continue;
                    for_each_subset_of(pool1, k - 1, [&](std::span<const int> rest1) {
                        auto e1 = extend(a, rest1);
                        auto pool3 = outside({&middle, &e1});
                        for_each_subset_of(pool3, k - 1, [&](std::span<const int> rest3) {
                            auto e3 = extend(b, rest3);
                            if (e1 < e3)
                                copies.push_back({e1, middle, e3});
                            return true;
                        });
                        return true;
                    });
                }
        }
        std::sort(copies.begin(), copies.end());
        return copies;
    }

    auto export_cnf(int k, int r, int n) -> CnfInstance
    {
        if (k < 2 || r < 1 || n < k)
            fail(ErrorCode::invalid_parameters, "CNF export needs k >= 2, r >= 1 and n >= k");
        CnfInstance cnf{k, n, r, lex_edges(n, k), 0, {}};
        for (std::size_t i = 0; i < cnf.edges.size(); ++i) {
            std::vector<int> clause;
            for (int c = 1; c <= r; ++c)
                clause.push_back(cnf.variable(i, c));
            cnf.clauses.push_back(std::move(clause));
        }
        auto paths = enumerate_loose_paths(n, k, 3);
        cnf.path_count = paths.size();
        for (auto & copy : paths) {
            std::size_t ids[3];
            for (int j = 0; j < 3; ++j)
                ids[j] = lex_rank(copy[j], n);
            for (int c = 1; c <= r; ++c)
                cnf.clauses.push_back({-cnf.variable(ids[0], c), -cnf.variable(ids[1], c), -cnf.variable(ids[2], c)});
        }
        return cnf;
    }

    auto to_dimacs(const CnfInstance & cnf) -> std::string
    {
        std::ostringstream out;
        out << "c loose 3-path Ramsey instance k=" << cnf.k << " n=" << cnf.n << " r=" << cnf.r << '\n';
        out << "c satisfiable iff some " << cnf.r << "-coloring avoids a monochromatic loose 3-path\n";
        out << "c paths " << cnf.path_count << '\n';
        for (std::size_t i = 0; i < cnf.edges.size(); ++i)
            for (int c = 1; c <= cnf.r; ++c) {
                out << "c var " << cnf.variable(i, c) << " = edge";
                for (auto v : cnf.edges[i])
                    out << ' ' << v;
                out << " color " << c << '\n';
            }
        out << "p cnf " << cnf.variables() << ' ' << cnf.clauses.size() << '\n';
        for (auto & clause : cnf.clauses) {
            for (auto lit : clause)
                out << lit << ' ';
            out << "0\n";
        }
        return out.str();
    }
}
