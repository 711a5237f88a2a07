#pragma once

#include <ramseylab/hypergraph.hpp>
#include <ramseylab/patterns.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramseylab
{
    /// Search engines represent edges as 64-bit vertex masks.
    inline constexpr int max_search_vertices = 64;

    /// Guard on r^C(n,k) for exhaustive_decide.
    inline constexpr std::uint64_t exhaustive_limit = 100'000'000;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t prunes = 0;
        double wall_seconds = 0.0;
    };

    enum class RamseyVerdict
    {
        holds,   // every r-coloring has a monochromatic loose 3-path
        fails,   // witness coloring attached
        unknown  // node budget exhausted
    };

    auto to_string(RamseyVerdict v) -> std::string;

    struct SearchOptions
    {
        int k = 3;
        int r = 2;
        int n = 7;
        std::uint64_t budget = 0; // max nodes, 0 = unlimited
        int threads = 1;
        bool vertex_pruning = false;
    };

    struct SearchOutcome
    {
        RamseyVerdict verdict;
        std::optional<Coloring> witness;
        SearchStats stats;
    };

    /// Backtracking over edges in lexicographic order. Color c is tried on an
    /// edge only when colors 1..c-1 already appear earlier; after each
    /// assignment only paths through the new edge are checked. With
    /// vertex_pruning the colors of the edges {0..k-2, x} must be
    /// nondecreasing in x. Threads split the tree by color prefixes and agree
    /// with the single-threaded verdict and witness when the budget is
    /// unlimited.
    auto decide_ramsey(const SearchOptions & options) -> SearchOutcome;

    /// Independent oracle: tries every r-coloring against every loose 3-path
    /// copy. Refuses instances with r^C(n,k) above exhaustive_limit.
    auto exhaustive_decide(int k, int r, int n) -> SearchOutcome;

    enum class Pattern
    {
        loose_path_3,
        loose_path_2
    };

    auto to_string(Pattern p) -> std::string;
    auto parse_pattern(std::string_view name) -> Pattern;
    auto path_length(Pattern p) -> int;

    enum class TuranStatus
    {
        exact,
        lower_bound_only
    };

    auto to_string(TuranStatus s) -> std::string;

    struct TuranResult
    {
        TuranStatus status;
        std::size_t max_edges;
        Hypergraph extremal;
        SearchStats stats;
    };

    /// Branch and bound over edge inclusion in lexicographic order, seeded with
    /// the full star (loose-path-3) or pair cover (loose-path-2).
    auto turan_max_edges(int k, int n, Pattern pattern, std::uint64_t budget = 0, int threads = 1) -> TuranResult;

    /// One copy of a loose path, edges in path order.
    using PathCopy = std::vector<Edge>;

    /// Every copy of the loose path of the given length in K^(k)_n, each once
    /// (oriented so the first edge precedes the last), sorted.
    auto enumerate_loose_paths(int n, int k, int length) -> std::vector<PathCopy>;

    struct CnfInstance
    {
        int k;
        int n;
        int r;
        std::vector<Edge> edges; // lexicographic; edge i owns variables i*r+1 .. i*r+r
        std::size_t path_count;
        std::vector<std::vector<int>> clauses;

        auto variables() const -> int { return static_cast<int>(edges.size()) * r; }
        auto variable(std::size_t edge_index, int color) const -> int { return static_cast<int>(edge_index) * r + color; }
    };

    /// At least one color per edge, and no loose 3-path copy monochromatic in
    /// any color. Satisfiable iff some r-coloring avoids a monochromatic path.
    auto export_cnf(int k, int r, int n) -> CnfInstance;

    auto to_dimacs(const CnfInstance & cnf) -> std::string;
}
