#pragma once

#include <ramseylab/hypergraph.hpp>
#include <ramseylab/patterns.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ramseylab
{
    /// Coloring of K^(k)_{r+3k-4} by r-1 stars and one clique. Centers are
    /// 0..r-2; an edge takes color i+1 for the smallest center i it contains,
    /// and edges avoiding all centers (inside the last 3k-3 vertices) take
    /// color r. No color class contains a loose 3-path.
    auto star_clique_coloring(int k, int r) -> Coloring;

    auto full_star(int n, int k, Vertex center) -> Hypergraph;

    /// All k-sets containing both vertices of the pair. Any two edges share at
    /// least the pair, so no two meet in exactly one vertex.
    auto pair_cover(int n, int k, Vertex a, Vertex b) -> Hypergraph;

    inline constexpr std::int64_t bound_constant_a = 250;

    struct BoundsReport
    {
        int k;
        int r;
        std::int64_t lower;      // r + 3k - 3
        std::int64_t upper_kr;   // k r, only for r >= r0(k)
        std::int64_t upper_250r; // 250 r, only for r >= r_k
        std::vector<std::string> caveats;
    };

    auto ramsey_bounds(int k, int r) -> BoundsReport;
}
