#include <ramseylab/combinatorics.hpp>
#include <ramseylab/constructions.hpp>
#include <ramseylab/error.hpp>

#include <algorithm>

namespace ramseylab
{
    auto star_clique_coloring(int k, int r) -> Coloring
    {
        if (k < 3 || r < 1)
            fail(ErrorCode::invalid_parameters, "star-clique coloring needs k >= 3 and r >= 1");
        int n = r + 3 * k - 4;
        int centers = r - 1;
        std::vector<int> colors;
        colors.reserve(binomial(n, k));
        for_each_subset(n, k, [&](std::span<const int> e) {
            // edges are ascending, so the smallest center is e[0] when it is one
            colors.push_back(e[0] < centers ? e[0] + 1 : r);
            return true;
        });
        return Coloring(k, n, r, std::move(colors));
    }

    auto full_star(int n, int k, Vertex center) -> Hypergraph
    {
        if (k < 2 || k > n)
            fail(ErrorCode::invalid_parameters, "full star needs 2 <= k <= n");
        if (center < 0 || center >= n)
            throw Error(ErrorCode::invalid_vertex, "star center outside [0, n)");
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
            if (v != center)
                others.push_back(v);
        std::vector<Edge> edges;
        for_each_subset_of(others, k - 1, [&](std::span<const int> s) {
            Edge e(s.begin(), s.end());
            e.insert(std::upper_bound(e.begin(), e.end(), center), center);
            edges.push_back(std::move(e));
            return true;
        });
        return Hypergraph(k, n, std::move(edges));
    }

    auto pair_cover(int n, int k, Vertex a, Vertex b) -> Hypergraph
    {
        if (k < 3 || k > n)
            fail(ErrorCode::invalid_parameters, "pair cover needs 3 <= k <= n");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(ErrorCode::invalid_vertex, "pair vertex outside [0, n)");
        if (a == b)
            fail(ErrorCode::invalid_parameters, "pair vertices must be distinct");
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
            if (v != a && v != b)
                others.push_back(v);
        std::vector<Edge> edges;
        for_each_subset_of(others, k - 2, [&](std::span<const int> s) {
            Edge e(s.begin(), s.end());
            e.push_back(a);
            e.push_back(b);
            edges.push_back(std::move(e));
            return true;
        });
        return Hypergraph(k, n, std::move(edges));
    }

    auto ramsey_bounds(int k, int r) -> BoundsReport
    {
        if (k < 3 || r < 1)
            fail(ErrorCode::invalid_parameters, "bounds need k >= 3 and r >= 1");
        BoundsReport report{k, r,
            static_cast<std::int64_t>(r) + 3 * static_cast<std::int64_t>(k) - 3,
            static_cast<std::int64_t>(k) * r,
            bound_constant_a * r,
            {}};
        report.caveats.push_back("upper_kr = k*r is proved only for r >= r0(k); r0(k) is not explicit");
        report.caveats.push_back("upper_250r = 250*r is proved only for r >= r_k; r_k is not explicit");
        if (report.lower > report.upper_kr)
            report.caveats.push_back("lower exceeds upper_kr, so r < r0(k) here");
        if (report.lower > report.upper_250r)
            report.caveats.push_back("lower exceeds upper_250r, so r < r_k here");
        return report;
    }
}
