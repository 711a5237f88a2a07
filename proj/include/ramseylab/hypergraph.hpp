#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramseylab
{
    using Vertex = int;

    /// A k-subset of vertices, strictly ascending.
    using Edge = std::vector<Vertex>;

    /// A k-uniform hypergraph on the dense vertex range [0, n). Edges are kept
    /// unique and in lexicographic order, so iteration is deterministic. Values
    /// are immutable once built.
    class Hypergraph
    {
    public:
        Hypergraph(int uniformity, int vertex_count);

        /// Edges may be unsorted and in any order; each is validated, sorted
        /// and checked for duplicates.
        Hypergraph(int uniformity, int vertex_count, std::vector<Edge> edges);

        auto uniformity() const -> int { return k_; }
        auto vertex_count() const -> int { return n_; }
        auto edge_count() const -> std::size_t { return edges_.size(); }
        auto edges() const -> const std::vector<Edge> & { return edges_; }
        auto empty() const -> bool { return edges_.empty(); }

        auto contains(const Edge & e) const -> bool;

        auto operator==(const Hypergraph &) const -> bool = default;

    private:
        int k_;
        int n_;
        std::vector<Edge> edges_;
    };

    /// (k-1)-set to the number of edges containing it.
    using MultiplicityMap = std::map<Edge, std::size_t>;

    auto complete_hypergraph(int n, int k) -> Hypergraph;

    auto degree(const Hypergraph & h, Vertex v) -> std::size_t;

    /// All vertex degrees, indexed by vertex.
    auto degrees(const Hypergraph & h) -> std::vector<std::size_t>;

    /// Vertex of maximum degree, smallest id on ties; (0, 0) when edgeless.
    auto max_degree(const Hypergraph & h) -> std::pair<Vertex, std::size_t>;

    /// The (k-1)-uniform link of v on the same vertex range.
    auto link(const Hypergraph & h, Vertex v) -> Hypergraph;

    auto shadow(const Hypergraph & h) -> Hypergraph;

    auto shadow_multiplicity(const Hypergraph & h) -> MultiplicityMap;

    /// Induced subhypergraph on V \ removed. Vertex ids and n are kept.
    auto remove_vertices(const Hypergraph & h, std::span<const Vertex> removed) -> Hypergraph;

    /// Vertices lying in at least one edge, ascending.
    auto covered_vertices(const Hypergraph & h) -> std::vector<Vertex>;

    auto parse_hypergraph(std::string_view text) -> Hypergraph;
    auto serialize_hypergraph(const Hypergraph & h) -> std::string;

    auto intersection_size(const Edge & a, const Edge & b) -> int;

    namespace detail
    {
        /// Splits text into lines of whitespace-separated integer tokens, skipping
        /// blank lines and '#' comments. Shared by the text file readers.
        struct NumberedRow
        {
            int line;
            std::vector<long long> values;
        };

        auto tokenize_rows(std::string_view text) -> std::vector<NumberedRow>;
    }
}
