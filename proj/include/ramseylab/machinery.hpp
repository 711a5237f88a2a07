#pragma once

#include <ramseylab/exact.hpp>
#include <ramseylab/hypergraph.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramseylab
{
    /// Remove, smallest id first, any vertex whose current degree is at most
    /// |E(H)| / n (threshold fixed from the input) until none is left. Every
    /// surviving vertex then has degree strictly above the threshold.
    auto peel_min_degree(const Hypergraph & h) -> Hypergraph;

    /// Threshold used by peel_min_degree.
    auto peel_threshold(const Hypergraph & h) -> Rational;

    /// Bipartite graph with labelled classes. Labels are arbitrary integers and
    /// are only compared within their own class.
    struct BipartiteGraph
    {
        std::vector<int> left;
        std::vector<int> right;
        std::vector<std::pair<int, int>> edges; // (left label, right label)

        auto operator==(const BipartiteGraph &) const -> bool = default;
    };

    /// Validates labels (distinct per class) and edges (endpoints exist, no repeats).
    void validate(const BipartiteGraph & b);

    /// Removes vertices of class i whose current degree is below |B| / (2 |V_i|)
    /// until every survivor meets its class threshold. Classes and edges of the
    /// result are sorted.
    auto prune_bipartite(const BipartiteGraph & b) -> BipartiteGraph;

    using WeightedVertices = std::map<int, Rational>;

    struct Tripartition
    {
        std::vector<int> parts[3];
        Rational sums[3];
    };

    /// Places vertices, heaviest first (ties by id), into the part with the
    /// smallest current sum (ties to the lowest index). Parts are returned in
    /// nondecreasing order of their sums.
    auto greedy_tripartition(const WeightedVertices & weights) -> Tripartition;

    /// A (k-1)-set f together with its apex v_f (v_f not in f).
    struct ApexAssignment
    {
        Edge set;
        Vertex apex;
    };

    struct SplitAssignment
    {
        std::vector<Vertex> u1;
        std::vector<Vertex> u2;
        std::size_t proper_count;
        Rational expectation;
    };

    /// Chance that a set is proper when each vertex joins U1 with probability 1/k.
    auto proper_probability(int k) -> Rational;

    /// Fixes vertices 0..n-1 in turn to whichever side keeps the conditional
    /// expected number of proper sets (apex in U1, set inside U2) larger,
    /// preferring U2 on ties. The final count is at least the unconditional
    /// expectation |F| / k * ((k-1)/k)^(k-1).
    auto derandomized_split(const std::vector<ApexAssignment> & assignments, int n, int k) -> SplitAssignment;

    /// Number of sets that are proper under the given split (u1_member[v] true
    /// for v in U1).
    auto count_proper(const std::vector<ApexAssignment> & assignments, const std::vector<bool> & u1_member) -> std::size_t;

    struct StabilityReport
    {
        Vertex vertex;
        Integer deficiency;  // |H| - deg(vertex)
        Rational bound;      // (24/25)^k C(n-1, k-1)
        bool holds;
    };

    auto stability_deficiency(const Hypergraph & h) -> StabilityReport;

    /// Enclosure of (1 - (b/(k-1))^(1/(k-2)))^(k-1) * C(n-1, k-1) of width at
    /// most precision.
    auto prop32_deficiency_bound(const Rational & b, int k, int n, const Rational & precision) -> Interval;

    /// The coefficient alone, (1 - (b/(k-1))^(1/(k-2)))^(k-1).
    auto prop32_coefficient(const Rational & b, int k, const Rational & precision) -> Interval;

    /// Enclosure of (b/(k-1))^(1/(k-2)) * (n-1) of width at most precision.
    auto claim_mm_lower_bound(const Rational & b, int k, int n, const Rational & precision) -> Interval;

    enum class Verdict
    {
        yes,
        no,
        undecided
    };

    auto to_string(Verdict v) -> std::string;

    /// One checked inequality lhs < rhs (or lhs <= rhs when not strict).
    struct InequalityRecord
    {
        std::string name;
        std::string statement;
        std::map<std::string, long> params;
        Verdict holds;
        /// lhs / rhs (or rhs - lhs when rhs is zero); exact when lo == hi.
        Interval certificate;
        bool certificate_is_ratio;
        bool asymptotic;
    };

    struct IneqReport
    {
        std::vector<InequalityRecord> records;

        auto find(const std::string & name) const -> const InequalityRecord *;
    };

    /// Checks the constant inequalities used in the upper-bound proof for this
    /// k (and A, r where they appear). r_list feeds the per-r check of
    /// r (24/25)^k C(Ar-1, k-1) < C((A-1)r, k); it may be empty.
    auto verify_constant_inequalities(int k, long a, const std::vector<long> & r_list) -> IneqReport;

    /// Smallest r in [1, limit] for which the per-r inequality holds.
    auto smallest_verified_r(int k, long a, long limit) -> std::optional<long>;
}
