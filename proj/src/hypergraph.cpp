#include <ramseylab/combinatorics.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/hypergraph.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ramseylab
{
    namespace
    {
        void check_vertex(const Hypergraph & h, Vertex v)
        {
            if (v < 0 || v >= h.vertex_count())
                throw Error(ErrorCode::invalid_vertex,
                    "vertex " + std::to_string(v) + " outside [0, " + std::to_string(h.vertex_count()) + ")");
        }

        auto edge_text(const Edge & e) -> std::string
        {
            std::string s = "{";
            for (std::size_t i = 0; i < e.size(); ++i)
                s += (i ? "," : "") + std::to_string(e[i]);
            return s + "}";
        }
    }

    Hypergraph::Hypergraph(int uniformity, int vertex_count) :
        k_(uniformity),
        n_(vertex_count)
    {
        if (uniformity < 1 || vertex_count < 0)
            fail(ErrorCode::invalid_parameters, "hypergraph needs k >= 1 and n >= 0");
    }

    Hypergraph::Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges) :
        Hypergraph(uniformity, vertex_count)
    {
        for (auto & e : edges) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != k_)
                fail(ErrorCode::invalid_parameters, "edge " + edge_text(e) + " does not have " + std::to_string(k_) + " vertices");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                fail(ErrorCode::invalid_parameters, "edge " + edge_text(e) + " repeats a vertex");
            if (e.front() < 0 || e.back() >= n_)
                throw Error(ErrorCode::invalid_vertex, "edge " + edge_text(e) + " leaves [0, " + std::to_string(n_) + ")");
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
            fail(ErrorCode::invalid_parameters, "duplicate edge " + edge_text(*dup));
        edges_ = std::move(edges);
    }

    auto Hypergraph::contains(const Edge & e) const -> bool
    {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    auto complete_hypergraph(int n, int k) -> Hypergraph
    {
        if (k < 2 || k > n)
            fail(ErrorCode::invalid_parameters, "complete hypergraph needs 2 <= k <= n");
        std::vector<Edge> edges;
        edges.reserve(binomial(n, k));
        for_each_subset(n, k, [&](std::span<const int> s) {
            edges.emplace_back(s.begin(), s.end());
            return true;
        });
        return Hypergraph(k, n, std::move(edges));
    }

    auto degree(const Hypergraph & h, Vertex v) -> std::size_t
    {
        check_vertex(h, v);
        return std::count_if(h.edges().begin(), h.edges().end(),
            [v](const Edge & e) { return std::binary_search(e.begin(), e.end(), v); });
    }

    auto degrees(const Hypergraph & h) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result(h.vertex_count(), 0);
        for (auto & e : h.edges())
            for (auto v : e)
                ++result[v];
        return result;
    }

    auto max_degree(const Hypergraph & h) -> std::pair<Vertex, std::size_t>
    {
        auto d = degrees(h);
        if (d.empty())
            return {0, 0};
        auto best = std::max_element(d.begin(), d.end());
        return {static_cast<Vertex>(best - d.begin()), *best};
    }

    auto link(const Hypergraph & h, Vertex v) -> Hypergraph
    {
        check_vertex(h, v);
        std::vector<Edge> result;
        for (auto & e : h.edges())
            if (std::binary_search(e.begin(), e.end(), v)) {
                Edge rest;
                std::copy_if(e.begin(), e.end(), std::back_inserter(rest), [v](Vertex u) { return u != v; });
                result.push_back(std::move(rest));
            }
        return Hypergraph(h.uniformity() - 1, h.vertex_count(), std::move(result));
    }

    auto shadow_multiplicity(const Hypergraph & h) -> MultiplicityMap
    {
        if (h.uniformity() < 2)
            fail(ErrorCode::invalid_parameters, "shadow needs k >= 2");
        MultiplicityMap result;
        for (auto & e : h.edges())
            for (std::size_t skip = 0; skip < e.size(); ++skip) {
                Edge f;
                f.reserve(e.size() - 1);
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (i != skip)
                        f.push_back(e[i]);
                ++result[f];
            }
        return result;
    }

    auto shadow(const Hypergraph & h) -> Hypergraph
    {
        auto mult = shadow_multiplicity(h);
        std::vector<Edge> sets;
        sets.reserve(mult.size());
        for (auto & [f, count] : mult)
            sets.push_back(f);
        return Hypergraph(h.uniformity() - 1, h.vertex_count(), std::move(sets));
    }

    auto remove_vertices(const Hypergraph & h, std::span<const Vertex> removed) -> Hypergraph
    {
        std::vector<char> gone(h.vertex_count(), 0);
        for (auto v : removed) {
            check_vertex(h, v);
            gone[v] = 1;
        }
        std::vector<Edge> kept;
        for (auto & e : h.edges())
            if (std::none_of(e.begin(), e.end(), [&](Vertex u) { return gone[u]; }))
                kept.push_back(e);
        return Hypergraph(h.uniformity(), h.vertex_count(), std::move(kept));
    }

    auto covered_vertices(const Hypergraph & h) -> std::vector<Vertex>
    {
        auto d = degrees(h);
        std::vector<Vertex> result;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (d[v] > 0)
                result.push_back(v);
        return result;
    }

    auto intersection_size(const Edge & a, const Edge & b) -> int
    {
        int count = 0;
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else {
                ++count;
                ++i;
                ++j;
            }
        }
        return count;
    }

    auto detail::tokenize_rows(std::string_view text) -> std::vector<NumberedRow>
    {
        std::vector<NumberedRow> rows;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (auto first = line.find_first_not_of(" \t\r"); first == std::string_view::npos || line[first] == '#')
                continue;

            NumberedRow row{line_no, {}};
            std::size_t i = 0;
            while (i < line.size()) {
                if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                    ++i;
                    continue;
                }
                long long value = 0;
                auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
                if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
                    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected an integer", line_no);
                row.values.push_back(value);
                i = ptr - line.data();
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    auto parse_hypergraph(std::string_view text) -> Hypergraph
    {
        auto rows = detail::tokenize_rows(text);
        auto error = [](int line, const std::string & what) {
            return Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what, line);
        };
        if (rows.empty())
            throw error(1, "missing header `k n m`");
        auto & header = rows.front();
        if (header.values.size() != 3)
            throw error(header.line, "header must be `k n m`");
        auto k = header.values[0], n = header.values[1], m = header.values[2];
        if (k < 1 || n < 0 || m < 0 || n > 1'000'000)
            throw error(header.line, "invalid header values");
        if (static_cast<long long>(rows.size()) - 1 != m)
            throw error(rows.back().line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));

        std::set<Edge> seen;
        std::vector<Edge> edges;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            auto & row = rows[i];
            if (static_cast<long long>(row.values.size()) != k)
                throw error(row.line, "edge must list exactly " + std::to_string(k) + " vertices");
            Edge e;
            for (auto v : row.values) {
                if (v < 0 || v >= n)
                    throw error(row.line, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
                e.push_back(static_cast<Vertex>(v));
            }
            if (! std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
                throw error(row.line, "edge vertices must be strictly ascending");
            if (! seen.insert(e).second)
                throw error(row.line, "duplicate edge");
            edges.push_back(std::move(e));
        }
        return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
    }

    auto serialize_hypergraph(const Hypergraph & h) -> std::string
    {
        std::ostringstream out;
        out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
        for (auto & e : h.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                out << (i ? " " : "") << e[i];
            out << '\n';
        }
        return out.str();
    }
}
