#pragma once

#include <ramseylab/hypergraph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramseylab
{
    /// Consecutive edges share exactly one vertex (listed in links); for three
    /// edges the ends are disjoint.
    struct LoosePathWitness
    {
        std::vector<Edge> edges;
        std::vector<Vertex> links;

        auto operator==(const LoosePathWitness &) const -> bool = default;
    };

    /// Re-checks the intersection pattern and, when host is given, that every
    /// edge belongs to it.
    auto is_loose_path(const LoosePathWitness & w, const Hypergraph * host = nullptr) -> bool;

    /// First loose path of the given length (2 or 3). Middle edges are scanned
    /// in lexicographic order, then link vertices ascending, then the outer edges
    /// in lexicographic order.
    auto find_loose_path(const Hypergraph & h, int length) -> std::optional<LoosePathWitness>;

    /// Smallest vertex contained in every edge. An edgeless hypergraph counts as
    /// a star centered at 0.
    auto is_star(const Hypergraph & h) -> std::optional<Vertex>;

    /// A star whose center has degree C(n-1, k-1). False when edgeless.
    auto is_full_star(const Hypergraph & h) -> bool;

    /// Total r-coloring of the edges of the complete k-graph on n vertices.
    /// Colors are 1..r and are indexed by the lexicographic rank of the edge.
    class Coloring
    {
    public:
        Coloring(int k, int n, int r, std::vector<int> colors);

        auto uniformity() const -> int { return k_; }
        auto vertex_count() const -> int { return n_; }
        auto colors() const -> int { return r_; }
        auto assignment() const -> const std::vector<int> & { return colors_; }

        auto color_of(const Edge & e) const -> int;

        /// Edges with color c, as a hypergraph on all n vertices.
        auto color_class(int c) const -> Hypergraph;

        auto operator==(const Coloring &) const -> bool = default;

    private:
        int k_;
        int n_;
        int r_;
        std::vector<int> colors_;
    };

    struct MonochromaticPath
    {
        int color;
        LoosePathWitness path;
    };

    /// Lowest color whose class contains a loose path of the given length.
    auto find_mono_loose_path(const Coloring & c, int length) -> std::optional<MonochromaticPath>;

    auto parse_coloring(std::string_view text) -> Coloring;
    auto serialize_coloring(const Coloring & c) -> std::string;
}
