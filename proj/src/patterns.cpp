#include <ramseylab/combinatorics.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/patterns.hpp>

#include <algorithm>
#include <sstream>

namespace ramseylab
{
    namespace
    {
        auto shared_vertex(const Edge & a, const Edge & b) -> std::optional<Vertex>
        {
            std::optional<Vertex> found;
            for (auto v : a)
                if (std::binary_search(b.begin(), b.end(), v)) {
                    if (found)
                        return std::nullopt;
                    found = v;
                }
            return found;
        }

        auto incidence(const Hypergraph & h) -> std::vector<std::vector<std::size_t>>
        {
            std::vector<std::vector<std::size_t>> inc(h.vertex_count());
            for (std::size_t i = 0; i < h.edge_count(); ++i)
                for (auto v : h.edges()[i])
                    inc[v].push_back(i);
            return inc;
        }

        // Edges meeting edges[i] in exactly one vertex, ascending.
        auto single_meets(const std::vector<Edge> & edges, const std::vector<std::vector<std::size_t>> & inc, std::size_t i)
            -> std::vector<std::size_t>
        {
            std::vector<std::size_t> out;
            for (auto v : edges[i])
                for (auto j : inc[v])
                    if (j != i && intersection_size(edges[i], edges[j]) == 1)
                        out.push_back(j);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }

        auto find_length_two(const Hypergraph & h) -> std::optional<LoosePathWitness>
        {
            auto inc = incidence(h);
            auto & edges = h.edges();
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (auto j : single_meets(edges, inc, i))
                    if (j > i)
                        return LoosePathWitness{{edges[i], edges[j]}, {*shared_vertex(edges[i], edges[j])}};
            return std::nullopt;
        }

        // Existence only: middle edge first, cheap on path-free hosts.
        auto has_length_three(const Hypergraph & h, const std::vector<std::vector<std::size_t>> & inc) -> bool
        {
            auto & edges = h.edges();
            std::vector<std::size_t> left, right;
            for (auto & middle : edges)
                for (std::size_t ai = 0; ai < middle.size(); ++ai) {
                    left.clear();
                    for (auto i : inc[middle[ai]])
                        if (intersection_size(edges[i], middle) == 1)
                            left.push_back(i);
                    if (left.empty())
                        continue;
                    for (std::size_t bi = ai + 1; bi < middle.size(); ++bi) {
                        right.clear();
                        for (auto i : inc[middle[bi]])
                            if (intersection_size(edges[i], middle) == 1)
                                right.push_back(i);
                        for (auto i : left)
                            for (auto j : right)
                                if (intersection_size(edges[i], edges[j]) == 0)
                                    return true;
                    }
                }
            return false;
        }

        // First witness in lexicographic order of (e1, e2, e3).
        auto find_length_three(const Hypergraph & h) -> std::optional<LoosePathWitness>
        {
            auto inc = incidence(h);
            if (! has_length_three(h, inc))
                return std::nullopt;
            auto & edges = h.edges();
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (auto j : single_meets(edges, inc, i)) {
                    auto a = *shared_vertex(edges[i], edges[j]);
                    std::optional<std::size_t> best;
                    for (auto b : edges[j]) {
                        if (b == a)
                            continue;
                        for (auto t : inc[b])
                            if ((! best || t < *best) && intersection_size(edges[t], edges[j]) == 1 &&
                                intersection_size(edges[t], edges[i]) == 0)
                                best = t;
                    }
                    if (best)
                        return LoosePathWitness{{edges[i], edges[j], edges[*best]}, {a, *shared_vertex(edges[j], edges[*best])}};
                }
            fail(ErrorCode::internal_error, "loose path scan disagrees with existence check");
        }
    }

    auto is_loose_path(const LoosePathWitness & w, const Hypergraph * host) -> bool
    {
        if (w.edges.size() < 2 || w.edges.size() > 3 || w.links.size() + 1 != w.edges.size())
            return false;
        for (auto & e : w.edges) {
            if (! std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
                return false;
            if (e.size() != w.edges.front().size())
                return false;
            if (host && ! host->contains(e))
                return false;
        }
        for (std::size_t i = 0; i + 1 < w.edges.size(); ++i)
            if (shared_vertex(w.edges[i], w.edges[i + 1]) != w.links[i])
                return false;
        if (w.edges.size() == 3 && intersection_size(w.edges[0], w.edges[2]) != 0)
            return false;
        return true;
    }

    auto find_loose_path(const Hypergraph & h, int length) -> std::optional<LoosePathWitness>
    {
        switch (length) {
            case 2: return find_length_two(h);
            case 3: return find_length_three(h);
            default: fail(ErrorCode::invalid_parameters, "loose path length must be 2 or 3");
        }
    }

    auto is_star(const Hypergraph & h) -> std::optional<Vertex>
    {
        if (h.empty())
            return 0;
        Edge common = h.edges().front();
        for (auto & e : h.edges()) {
            Edge next;
            std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
            common = std::move(next);
            if (common.empty())
                return std::nullopt;
        }
        return common.front();
    }

    auto is_full_star(const Hypergraph & h) -> bool
    {
        if (h.empty())
            return false;
        auto center = is_star(h);
        return center && degree(h, *center) == binomial(h.vertex_count() - 1, h.uniformity() - 1);
    }

    Coloring::Coloring(int k, int n, int r, std::vector<int> colors) :
        k_(k),
        n_(n),
        r_(r),
        colors_(std::move(colors))
    {
        if (k < 1 || n < k || r < 1)
            fail(ErrorCode::invalid_parameters, "coloring needs 1 <= k <= n and r >= 1");
        if (colors_.size() != binomial(n, k))
            fail(ErrorCode::invalid_parameters, "coloring must assign a color to each of the C(n,k) edges");
        for (auto c : colors_)
            if (c < 1 || c > r)
                fail(ErrorCode::invalid_parameters, "color " + std::to_string(c) + " outside 1.." + std::to_string(r));
    }

    auto Coloring::color_of(const Edge & e) const -> int
    {
        if (static_cast<int>(e.size()) != k_ || e.front() < 0 || e.back() >= n_)
            fail(ErrorCode::invalid_parameters, "not an edge of the colored complete hypergraph");
        return colors_[lex_rank(e, n_)];
    }

    auto Coloring::color_class(int c) const -> Hypergraph
    {
        std::vector<Edge> edges;
        std::size_t index = 0;
        for_each_subset(n_, k_, [&](std::span<const int> s) {
            if (colors_[index++] == c)
                edges.emplace_back(s.begin(), s.end());
            return true;
        });
        return Hypergraph(k_, n_, std::move(edges));
    }

    auto find_mono_loose_path(const Coloring & c, int length) -> std::optional<MonochromaticPath>
    {
        if (length != 2 && length != 3)
            fail(ErrorCode::invalid_parameters, "loose path length must be 2 or 3");
        for (int color = 1; color <= c.colors(); ++color)
            if (auto w = find_loose_path(c.color_class(color), length))
                return MonochromaticPath{color, std::move(*w)};
        return std::nullopt;
    }

    auto parse_coloring(std::string_view text) -> Coloring
    {
        auto rows = detail::tokenize_rows(text);
        auto error = [](int line, const std::string & what) {
            return Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what, line);
        };
        if (rows.empty())
            throw error(1, "missing header `k n m r`");
        auto & header = rows.front();
        if (header.values.size() != 4)
            throw error(header.line, "header must be `k n m r`");
        auto k = header.values[0], n = header.values[1], m = header.values[2], r = header.values[3];
        if (k < 1 || n < k || r < 1 || n > 4096 || r > 1'000'000)
            throw error(header.line, "invalid header values");
        std::uint64_t expected = 0;
        try {
            expected = binomial(n, k);
        }
        catch (const Error &) {
            throw error(header.line, "too many edges");
        }
        if (m < 0 || static_cast<std::uint64_t>(m) != expected)
            throw error(header.line, "m must equal C(n,k) = " + std::to_string(expected));
        if (rows.size() - 1 != expected)
            throw error(rows.back().line, "expected " + std::to_string(expected) + " colored edges, found " + std::to_string(rows.size() - 1));

        std::vector<int> colors(expected, 0);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            auto & row = rows[i];
            if (static_cast<long long>(row.values.size()) != k + 1)
                throw error(row.line, "expected " + std::to_string(k) + " vertices and a color");
            Edge e;
            for (long long j = 0; j < k; ++j) {
                auto v = row.values[j];
                if (v < 0 || v >= n)
                    throw error(row.line, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
                e.push_back(static_cast<Vertex>(v));
            }
            if (! std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
                throw error(row.line, "edge vertices must be strictly ascending");
            auto c = row.values.back();
            if (c < 1 || c > r)
                throw error(row.line, "color " + std::to_string(c) + " outside 1.." + std::to_string(r));
            auto & slot = colors[lex_rank(e, static_cast<int>(n))];
            if (slot != 0)
                throw error(row.line, "edge colored twice");
            slot = static_cast<int>(c);
        }
        return Coloring(static_cast<int>(k), static_cast<int>(n), static_cast<int>(r), std::move(colors));
    }

    auto serialize_coloring(const Coloring & c) -> std::string
    {
        std::ostringstream out;
        out << c.uniformity() << ' ' << c.vertex_count() << ' ' << c.assignment().size() << ' ' << c.colors() << '\n';
        std::size_t index = 0;
        for_each_subset(c.vertex_count(), c.uniformity(), [&](std::span<const int> s) {
            for (auto v : s)
                out << v << ' ';
            out << c.assignment()[index++] << '\n';
            return true;
        });
        return out.str();
    }
}
