#include <ramseylab/combinatorics.hpp>
#include <ramseylab/error.hpp>
#include <ramseylab/machinery.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace ramseylab
{
    auto peel_threshold(const Hypergraph & h) -> Rational
    {
        if (h.vertex_count() == 0)
            fail(ErrorCode::invalid_parameters, "peel needs at least one vertex");
        return ratio(static_cast<long>(h.edge_count()), h.vertex_count());
    }

    auto peel_min_degree(const Hypergraph & h) -> Hypergraph
    {
        if (h.empty())
            fail(ErrorCode::invalid_parameters, "peel needs at least one edge");
        auto & edges = h.edges();
        auto n = static_cast<std::size_t>(h.vertex_count());
        auto total = edges.size();

        std::vector<std::vector<std::size_t>> incident(n);
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (auto v : edges[i])
                incident[v].push_back(i);

        std::vector<std::size_t> deg(n);
        for (std::size_t v = 0; v < n; ++v)
            deg[v] = incident[v].size();
        std::vector<char> vertex_alive(n, 1), edge_alive(edges.size(), 1);

        // deg <= |E| / n  <=>  deg * n <= |E|
        auto below = [&](std::size_t v) { return vertex_alive[v] && deg[v] * n <= total; };
        std::size_t v = 0;
        while (v < n) {
            if (! below(v)) {
                ++v;
                continue;
            }
            vertex_alive[v] = 0;
            for (auto i : incident[v])
                if (edge_alive[i]) {
                    edge_alive[i] = 0;
                    for (auto u : edges[i])
                        --deg[u];
                }
            v = 0;
        }

        std::vector<Edge> kept;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edge_alive[i])
                kept.push_back(edges[i]);
        if (kept.empty())
            fail(ErrorCode::internal_error, "degree peel emptied the hypergraph");
        return Hypergraph(h.uniformity(), h.vertex_count(), std::move(kept));
    }

    void validate(const BipartiteGraph & b)
    {
        auto check_class = [](std::vector<int> labels, const char * name) {
            std::sort(labels.begin(), labels.end());
            if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
                fail(ErrorCode::invalid_parameters, std::string("repeated label in ") + name + " class");
            return labels;
        };
        auto left = check_class(b.left, "left");
        auto right = check_class(b.right, "right");
        std::set<std::pair<int, int>> seen;
        for (auto & [l, r] : b.edges) {
            if (! std::binary_search(left.begin(), left.end(), l) || ! std::binary_search(right.begin(), right.end(), r))
                fail(ErrorCode::invalid_parameters, "bipartite edge (" + std::to_string(l) + "," + std::to_string(r) + ") has an unknown endpoint");
            if (! seen.emplace(l, r).second)
                fail(ErrorCode::invalid_parameters, "repeated bipartite edge");
        }
    }

    auto prune_bipartite(const BipartiteGraph & b) -> BipartiteGraph
    {
        validate(b);
        if (b.edges.empty() || b.left.empty() || b.right.empty())
            fail(ErrorCode::invalid_parameters, "prune needs a nonempty bipartite graph");

        BipartiteGraph g;
        g.left = b.left;
        g.right = b.right;
        std::sort(g.left.begin(), g.left.end());
        std::sort(g.right.begin(), g.right.end());
        g.edges = b.edges;
        std::sort(g.edges.begin(), g.edges.end());

        auto total = b.edges.size();
        auto left_size = b.left.size(), right_size = b.right.size();
        // deg < |B| / (2 |V_i|)  <=>  2 |V_i| deg < |B|
        while (true) {
            std::map<int, std::size_t> left_deg, right_deg;
            for (auto & [l, r] : g.edges) {
                ++left_deg[l];
                ++right_deg[r];
            }
            auto low_left = std::find_if(g.left.begin(), g.left.end(), [&](int l) { return 2 * left_size * left_deg[l] < total; });
            if (low_left != g.left.end()) {
                int gone = *low_left;
                g.left.erase(low_left);
                std::erase_if(g.edges, [gone](auto & e) { return e.first == gone; });
                continue;
            }
            auto low_right = std::find_if(g.right.begin(), g.right.end(), [&](int r) { return 2 * right_size * right_deg[r] < total; });
            if (low_right != g.right.end()) {
                int gone = *low_right;
                g.right.erase(low_right);
                std::erase_if(g.edges, [gone](auto & e) { return e.second == gone; });
                continue;
            }
            break;
        }
        if (g.edges.empty())
            fail(ErrorCode::internal_error, "bipartite pruning removed every edge");
        return g;
    }

    auto greedy_tripartition(const WeightedVertices & weights) -> Tripartition
    {
        std::vector<std::pair<int, Rational>> order(weights.begin(), weights.end());
        for (auto & [v, w] : order)
            if (w < 0)
                fail(ErrorCode::invalid_parameters, "tripartition weights must be nonnegative");
        std::stable_sort(order.begin(), order.end(), [](auto & a, auto & b) { return a.second > b.second; });

        Tripartition t;
        for (auto & s : t.sums)
            s = 0;
        for (auto & [v, w] : order) {
            int target = 0;
            for (int i = 1; i < 3; ++i)
                if (t.sums[i] < t.sums[target])
                    target = i;
            t.parts[target].push_back(v);
            t.sums[target] += w;
        }

        std::array<int, 3> rank{0, 1, 2};
        std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) { return t.sums[a] < t.sums[b]; });
        Tripartition sorted;
        for (int i = 0; i < 3; ++i) {
            sorted.parts[i] = std::move(t.parts[rank[i]]);
            std::sort(sorted.parts[i].begin(), sorted.parts[i].end());
            sorted.sums[i] = t.sums[rank[i]];
        }
        return sorted;
    }

    auto proper_probability(int k) -> Rational
    {
        if (k < 2)
            fail(ErrorCode::invalid_parameters, "split needs k >= 2");
        return ratio(1, k) * power(ratio(k - 1, k), k - 1);
    }

    auto count_proper(const std::vector<ApexAssignment> & assignments, const std::vector<bool> & u1_member) -> std::size_t
    {
        return std::count_if(assignments.begin(), assignments.end(), [&](const ApexAssignment & a) {
            return u1_member[a.apex] && std::none_of(a.set.begin(), a.set.end(), [&](Vertex u) { return u1_member[u]; });
        });
    }

    auto derandomized_split(const std::vector<ApexAssignment> & assignments, int n, int k) -> SplitAssignment
    {
        if (k < 2 || n < 0)
            fail(ErrorCode::invalid_parameters, "split needs k >= 2 and n >= 0");
        std::vector<std::vector<std::size_t>> touching(n);
        for (std::size_t i = 0; i < assignments.size(); ++i) {
            auto & a = assignments[i];
            if (static_cast<int>(a.set.size()) != k - 1)
                throw Error(ErrorCode::invalid_assignment, "assigned set must have k-1 vertices");
            if (a.apex < 0 || a.apex >= n)
                throw Error(ErrorCode::invalid_assignment, "apex outside [0, n)");
            for (std::size_t j = 0; j < a.set.size(); ++j) {
                if (a.set[j] < 0 || a.set[j] >= n || (j > 0 && a.set[j - 1] >= a.set[j]))
                    throw Error(ErrorCode::invalid_assignment, "assigned set must be ascending inside [0, n)");
                if (a.set[j] == a.apex)
                    throw Error(ErrorCode::invalid_assignment, "apex " + std::to_string(a.apex) + " lies in its own set");
                touching[a.set[j]].push_back(i);
            }
            touching[a.apex].push_back(i);
        }

        Rational p = ratio(1, k), q = ratio(k - 1, k);
        std::vector<Rational> q_power(k + 1);
        q_power[0] = 1;
        for (int i = 1; i <= k; ++i)
            q_power[i] = q_power[i - 1] * q;

        enum Side : char { free_side, in_u1, in_u2 };
        std::vector<Side> side(n, free_side);

        // probability that assignment i ends up proper given the sides fixed so far
        auto conditional = [&](std::size_t i) -> Rational {
            auto & a = assignments[i];
            if (side[a.apex] == in_u2)
                return 0;
            int free_members = 0;
            for (auto u : a.set) {
                if (side[u] == in_u1)
                    return 0;
                if (side[u] == free_side)
                    ++free_members;
            }
            return (side[a.apex] == in_u1 ? Rational(1) : p) * q_power[free_members];
        };

        for (Vertex v = 0; v < n; ++v) {
            Rational if_u1 = 0, if_u2 = 0;
            side[v] = in_u1;
            for (auto i : touching[v])
                if_u1 += conditional(i);
            side[v] = in_u2;
            for (auto i : touching[v])
                if_u2 += conditional(i);
            side[v] = if_u1 > if_u2 ? in_u1 : in_u2;
        }

        SplitAssignment result;
        std::vector<bool> member(n, false);
        for (Vertex v = 0; v < n; ++v) {
            member[v] = side[v] == in_u1;
            (member[v] ? result.u1 : result.u2).push_back(v);
        }
        result.proper_count = count_proper(assignments, member);
        result.expectation = Rational(static_cast<unsigned long>(assignments.size())) * proper_probability(k);
        if (result.proper_count < result.expectation)
            fail(ErrorCode::internal_error, "conditional expectations fell below the expectation");
        return result;
    }

    auto stability_deficiency(const Hypergraph & h) -> StabilityReport
    {
        int k = h.uniformity();
        if (k < 2)
            fail(ErrorCode::invalid_parameters, "stability needs k >= 2");
        auto [v, d] = max_degree(h);
        StabilityReport report;
        report.vertex = v;
        report.deficiency = Integer(static_cast<unsigned long>(h.edge_count() - d));
        report.bound = power(ratio(24, 25), k) * binomial_exact(h.vertex_count() - 1, k - 1);
        report.holds = report.deficiency <= report.bound;
        return report;
    }

    namespace
    {
        void check_root_parameters(const Rational & b, int k, const Rational & precision)
        {
            if (k < 3)
                fail(ErrorCode::invalid_parameters, "root bounds need k >= 3");
            if (b <= 0 || b > k - 1)
                fail(ErrorCode::invalid_parameters, "b must lie in (0, k-1]");
            if (precision <= 0)
                fail(ErrorCode::invalid_parameters, "precision must be positive");
        }

        // (1 - x)^(k-1) is decreasing in x
        auto coefficient_from_root(const Interval & root, int k) -> Interval
        {
            return Interval{power(1 - root.hi, k - 1), power(1 - root.lo, k - 1)};
        }

        auto scaled_coefficient(const Rational & b, int k, const Rational & scale, const Rational & precision) -> Interval
        {
            check_root_parameters(b, k, precision);
            Rational c = b / (k - 1);
            auto root = root_enclosure(c, k - 2, [&](const Interval & x) {
                return coefficient_from_root(x, k).width() * scale <= precision;
            });
            auto coef = coefficient_from_root(root, k);
            return Interval{coef.lo * scale, coef.hi * scale};
        }
    }

    auto prop32_coefficient(const Rational & b, int k, const Rational & precision) -> Interval
    {
        return scaled_coefficient(b, k, Rational(1), precision);
    }

    auto prop32_deficiency_bound(const Rational & b, int k, int n, const Rational & precision) -> Interval
    {
        if (n < 1)
            fail(ErrorCode::invalid_parameters, "n must be positive");
        return scaled_coefficient(b, k, Rational(binomial_exact(n - 1, k - 1)), precision);
    }

    auto claim_mm_lower_bound(const Rational & b, int k, int n, const Rational & precision) -> Interval
    {
        check_root_parameters(b, k, precision);
        if (n < 1)
            fail(ErrorCode::invalid_parameters, "n must be positive");
        Rational scale(n - 1);
        auto root = root_enclosure(b / (k - 1), k - 2, [&](const Interval & x) { return x.width() * scale <= precision; });
        return Interval{root.lo * scale, root.hi * scale};
    }

    auto to_string(Verdict v) -> std::string
    {
        switch (v) {
            case Verdict::yes: return "yes";
            case Verdict::no: return "no";
            case Verdict::undecided: return "undecided";
        }
        return "undecided";
    }

    auto IneqReport::find(const std::string & name) const -> const InequalityRecord *
    {
        auto it = std::find_if(records.begin(), records.end(), [&](auto & r) { return r.name == name; });
        return it == records.end() ? nullptr : &*it;
    }

    namespace
    {
        auto compare(std::string name, std::string statement, std::map<std::string, long> params,
            const Rational & lhs, const Rational & rhs, bool strict, bool asymptotic) -> InequalityRecord
        {
            InequalityRecord rec{std::move(name), std::move(statement), std::move(params), Verdict::undecided, {}, true, asymptotic};
            bool holds = strict ? lhs < rhs : lhs <= rhs;
            rec.holds = holds ? Verdict::yes : Verdict::no;
            Rational cert;
            if (rhs != 0)
                cert = lhs / rhs;
            else {
                cert = rhs - lhs;
                rec.certificate_is_ratio = false;
            }
            rec.certificate = Interval{cert, cert};
            return rec;
        }

        auto theorem_inequality(int k, long a, long r) -> InequalityRecord
        {
            Rational lhs = Rational(r) * power(ratio(24, 25), k) * binomial_exact(a * r - 1, k - 1);
            Rational rhs{binomial_exact((a - 1) * r, k)};
            return compare("thm1_A_lt_A", "r (24/25)^k C(Ar-1, k-1) < C((A-1)r, k)",
                {{"k", k}, {"A", a}, {"r", r}}, lhs, rhs, true, true);
        }

        // (1 - (0.9^k/(k-1))^(1/(k-2)))^(k-1) < 0.96^k, decided by escalating precision
        auto lemma_final_inequality(int k) -> InequalityRecord
        {
            Rational rhs = power(ratio(24, 25), k);
            Rational b = power(ratio(9, 10), k);
            InequalityRecord rec{"l1_final", "(1 - (0.9^k/(k-1))^(1/(k-2)))^(k-1) < (24/25)^k",
                {{"k", k}}, Verdict::undecided, {}, true, false};
            Rational precision = rhs;
            for (int attempt = 0; attempt < 64; ++attempt, precision /= 4) {
                auto coef = prop32_coefficient(b, k, precision);
                rec.certificate = Interval{coef.lo / rhs, coef.hi / rhs};
                if (coef.hi < rhs) {
                    rec.holds = Verdict::yes;
                    break;
                }
                if (coef.lo >= rhs) {
                    rec.holds = Verdict::no;
                    break;
                }
            }
            return rec;
        }
    }

    auto verify_constant_inequalities(int k, long a, const std::vector<long> & r_list) -> IneqReport
    {
        if (k < 3 || a < 2)
            fail(ErrorCode::invalid_parameters, "constants need k >= 3 and A >= 2");
        for (auto r : r_list)
            if (r < 1)
                fail(ErrorCode::invalid_parameters, "r values must be positive");

        const Rational big = ratio(24, 25), small = ratio(9, 10);
        const Rational kk(k);
        IneqReport report;
        for (auto r : r_list)
            report.records.push_back(theorem_inequality(k, a, r));

        report.records.push_back(compare("k_lt_99_96_pow", "k < (99/96)^k", {{"k", k}},
            kk, power(ratio(99, 96), k), true, false));

        // 0.99 <= 1 - 1/A
        report.records.push_back(compare("one_minus_inv_A", "99/100 <= 1 - 1/A", {{"A", a}},
            ratio(99, 100), 1 - ratio(1, a), false, false));

        // (9/10)^k < (1/(32k)) (24/25)^(2k) (k-1), the n-free form of the averaging step
        report.records.push_back(compare("cl3_averaging", "(9/10)^k < (24/25)^(2k) (k-1) / (32k)", {{"k", k}},
            power(small, k), power(big, 2 * k) * (k - 1) / (32 * kk), true, false));

        report.records.push_back(compare("tripartition_gap", "(9/10)^k < (24/25)^k / (144k)", {{"k", k}},
            power(small, k), power(big, k) / (144 * kk), true, false));

        // 0.96^(k/(k-1)) > 0.96^2, raised to the (k-1)th power
        report.records.push_back(compare("l1_exponent_step", "(24/25)^(2(k-1)) < (24/25)^k", {{"k", k}},
            power(big, 2 * (k - 1)), power(big, k), true, false));
        report.records.push_back(compare("l1_square_step", "9/10 < (24/25)^2", {},
            small, power(big, 2), true, false));
        report.records.push_back(compare("l1_tenth_power", "(1/10)^(k-2) (k-1) < (9/10)^k", {{"k", k}},
            power(ratio(1, 10), k - 2) * (k - 1), power(small, k), true, false));

        report.records.push_back(lemma_final_inequality(k));

        // n-free limit of C(0.9n, k-2) < (0.96^k / (48 k^2)) C(n-2, k-2)
        report.records.push_back(compare("relaxed_vertex_count", "(9/10)^(k-2) 48 k^2 < (24/25)^k", {{"k", k}},
            power(small, k - 2) * 48 * kk * kk, power(big, k), true, true));

        report.records.push_back(compare("proper_probability", "1/(3k) < (1/k) ((k-1)/k)^(k-1)", {{"k", k}},
            Rational(1) / (3 * kk), proper_probability(k), true, false));

        return report;
    }

    auto smallest_verified_r(int k, long a, long limit) -> std::optional<long>
    {
        if (k < 3 || a < 2)
            fail(ErrorCode::invalid_parameters, "constants need k >= 3 and A >= 2");
        for (long r = 1; r <= limit; ++r)
            if (theorem_inequality(k, a, r).holds == Verdict::yes)
                return r;
        return std::nullopt;
    }
}
