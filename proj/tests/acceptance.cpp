// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include <ramseylab/combinatorics.hpp>
#include <ramseylab/constructions.hpp>
#include <ramseylab/machinery.hpp>
#include <ramseylab/property_suite.hpp>
#include <ramseylab/search.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

using namespace ramseylab;

namespace
{
    // time limits in seconds
    constexpr double limit_graph_r2 = 5;
    constexpr double limit_graph_r3 = 600;
    constexpr double limit_construction = 10;
    constexpr double limit_turan_trivial = 1;
    constexpr double limit_turan_small = 120;
    constexpr double limit_properties = 120;
    constexpr double limit_constants = 60;
    constexpr double limit_intervals = 30;
    constexpr int property_instances = 1000;
    constexpr int interval_samples = 100;

    int failures = 0;

    struct Check
    {
        bool ok = true;
        std::string detail;

        void require(bool cond, const std::string & what)
        {
            if (! cond) {
                ok = false;
                detail += (detail.empty() ? "" : "; ") + what;
            }
        }
    };

    template <typename Body>
    void criterion(int id, const char * title, double limit, Body body)
    {
        Check c;
        auto start = std::chrono::steady_clock::now();
        std::string note = body(c);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit > 0)
            c.require(secs < limit, "over time limit " + std::to_string(limit) + " s");
        failures += ! c.ok;
        std::printf("criterion %d %s: %s (%.2f s)%s%s%s%s\n", id, c.ok ? "PASS" : "FAIL", title, secs,
            note.empty() ? "" : " ", note.c_str(), c.detail.empty() ? "" : " :: ", c.detail.c_str());
        std::fflush(stdout);
    }

    auto decide(int k, int r, int n) -> SearchOutcome
    {
        SearchOptions o;
        o.k = k;
        o.r = r;
        o.n = n;
        return decide_ramsey(o);
    }

    auto name(int k, int r, int n) -> std::string
    {
        return "(" + std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(n) + ")";
    }

    auto seed() -> std::uint64_t
    {
        const char * env = std::getenv("RAMSEYLAB_SEED");
        return env ? std::strtoull(env, nullptr, 10) : 20170318;
    }
}

int main()
{
    criterion(1, "R(P(2);2) = 5", limit_graph_r2, [](Check & c) {
        auto four = decide(2, 2, 4);
        c.require(four.verdict == RamseyVerdict::fails, "(2,2,4) did not fail");
        c.require(four.witness && ! find_mono_loose_path(*four.witness, 3), "(2,2,4) witness not verified");
        c.require(decide(2, 2, 5).verdict == RamseyVerdict::holds, "(2,2,5) did not hold");
        return std::string("R = 5 = 2*2+1");
    });

    criterion(2, "R(P(2);3) determined", limit_graph_r3, [](Check & c) {
        int value = 0;
        for (int n = 5; n <= 8; ++n) {
            auto out = decide(2, 3, n);
            c.require(out.verdict != RamseyVerdict::unknown, "unknown at n=" + std::to_string(n));
            if (out.verdict == RamseyVerdict::fails) {
                c.require(value == 0, "fails after holding at n=" + std::to_string(n));
                c.require(out.witness && ! find_mono_loose_path(*out.witness, 3), "bad witness");
            }
            else if (value == 0)
                value = n;
        }
        c.require(value >= 6 && value - 6 <= 2, "R - 6 outside {0,1,2}");
        return "R = " + std::to_string(value) + ", c_3 = " + std::to_string(value - 6);
    });

    criterion(3, "star-clique colorings clean", limit_construction, [](Check & c) {
        for (int k = 3; k <= 5; ++k)
            for (int r = 2; r <= 6; ++r) {
                auto col = star_clique_coloring(k, r);
                c.require(col.vertex_count() == r + 3 * k - 4, "vertex count " + name(k, r, col.vertex_count()));
                c.require(! find_mono_loose_path(col, 3), "monochromatic path in " + name(k, r, col.vertex_count()));
            }
        return std::string("15 colorings, R >= r+3k-3");
    });

    criterion(4, "Turan trivial regime", limit_turan_trivial, [](Check & c) {
        auto a = turan_max_edges(3, 6, Pattern::loose_path_3);
        auto b = turan_max_edges(4, 6, Pattern::loose_path_2);
        c.require(a.status == TuranStatus::exact && a.max_edges == 20, "(3,6) gave " + std::to_string(a.max_edges));
        c.require(b.status == TuranStatus::exact && b.max_edges == 15, "(4,6) gave " + std::to_string(b.max_edges));
        return "20, 15";
    });

    criterion(5, "Turan small graphs", limit_turan_small, [](Check & c) {
        std::string values;
        for (int n = 4; n <= 7; ++n) {
            auto t = turan_max_edges(2, n, Pattern::loose_path_3);
            auto truth = oracle::turan(n, 2, 3);
            c.require(t.status == TuranStatus::exact && t.max_edges == truth, "k=2 n=" + std::to_string(n));
            values += (values.empty() ? "" : ",") + std::to_string(t.max_edges);
        }
        for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 6}, {4, 9}}) {
            auto t = turan_max_edges(k, n, Pattern::loose_path_3);
            c.require(t.max_edges >= binomial(n - 1, k - 1), "full star bound at k=" + std::to_string(k) + " n=" + std::to_string(n));
            c.require(! find_loose_path(t.extremal, 3), "extremal contains the pattern");
        }
        return "k=2, n=4..7: " + values;
    });

    criterion(6, "search = exhaustive = CNF", 0, [](Check & c) {
        std::vector<std::tuple<int, int, int>> set{{2, 2, 4}, {2, 2, 5}, {2, 3, 5}, {2, 3, 6}, {2, 1, 3}, {2, 1, 4}, {2, 4, 5}, {3, 2, 6}, {4, 2, 6}};
        for (int n = 3; n <= 8; ++n)
            set.emplace_back(3, 1, n);
        for (auto [k, r, n] : set) {
            auto search = decide(k, r, n).verdict;
            auto full = exhaustive_decide(k, r, n).verdict;
            c.require(search == full, "verdicts differ at " + name(k, r, n));
            auto d = oracle::parse_dimacs(to_dimacs(export_cnf(k, r, n)));
            bool sat = oracle::satisfiable_by_colorings(d, n, k, r);
            c.require(sat == (search == RamseyVerdict::fails), "CNF disagrees at " + name(k, r, n));
        }
        return std::to_string(set.size()) + " instances; (2,3,7) and (2,3,8) exceed the 1e8 enumeration guard";
    });

    criterion(7, "machinery property suite", limit_properties, [](Check & c) {
        auto s = seed();
        for (auto & p : run_machinery_properties(s, property_instances)) {
            c.require(p.instances == property_instances, p.name + " ran " + std::to_string(p.instances));
            c.require(p.failures == 0, p.name + ": " + p.first_failure);
        }
        return "seed " + std::to_string(s) + ", " + std::to_string(property_instances) + " instances each";
    });

    criterion(8, "constant inequalities", limit_constants, [](Check & c) {
        auto verdict = [](int k, const char * rec) { return verify_constant_inequalities(k, 250, {}).find(rec)->holds; };
        c.require(verdict(100, "k_lt_99_96_pow") == Verdict::no, "(ii) at k=100");
        for (int k = 3; k <= 400; ++k) {
            auto report = verify_constant_inequalities(k, 250, {});
            if (k >= 167)
                c.require(report.find("k_lt_99_96_pow")->holds == Verdict::yes, "(ii) at k=" + std::to_string(k));
            if (k <= 300)
                c.require(report.find("l1_tenth_power")->holds == Verdict::yes, "(vi) at k=" + std::to_string(k));
            if (k >= 250)
                c.require(report.find("tripartition_gap")->holds == Verdict::yes, "(v) at k=" + std::to_string(k));
        }
        auto smallest = smallest_verified_r(250, 250, 1000);
        c.require(smallest.has_value(), "(i) unverified for r <= 1000");
        std::vector<long> sample{2, 3, 7, 10, 100, 1000};
        auto report = verify_constant_inequalities(250, 250, sample);
        for (auto & rec : report.records)
            if (rec.name == "thm1_A_lt_A" && smallest && rec.params.at("r") >= *smallest)
                c.require(rec.holds == Verdict::yes, "(i) at r=" + std::to_string(rec.params.at("r")));
        return "smallest verified r for (i) at A=k=250: " + (smallest ? std::to_string(*smallest) : std::string("none"));
    });

    criterion(9, "interval enclosures", limit_intervals, [](Check & c) {
        auto eps = ratio(1, 1000000000);
        // exact cases: k = 3, or b/(k-1) a perfect (k-2)th power
        for (int k = 3; k <= 7; ++k)
            for (long p = 1; p <= 4; ++p)
                for (long q = p; q <= 5; ++q) {
                    Rational root = ratio(p, q);
                    Rational b = power(root, static_cast<unsigned long>(k - 2)) * (k - 1);
                    Rational x = root;
                    int n = 12;
                    Rational coef = power(1 - x, static_cast<unsigned long>(k - 1)) * Rational(Integer(binomial_exact(n - 1, k - 1)));
                    c.require(prop32_deficiency_bound(b, k, n, eps).contains(coef), "prop32 misses exact value");
                    c.require(claim_mm_lower_bound(b, k, n, eps).contains(x * (n - 1)), "claim-mm misses exact value");
                }
        std::mt19937_64 rng(seed());
        for (int i = 0; i < interval_samples; ++i) {
            int k = 3 + static_cast<int>(rng() % 30);
            long den = 1 + static_cast<long>(rng() % 1000);
            long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den * (k - 1)));
            Rational b = ratio(num, den);
            Rational precision = ratio(1, 1 + static_cast<long>(rng() % 1000000000));
            auto root = claim_mm_lower_bound(b, k, 2, precision);
            auto defi = prop32_deficiency_bound(b, k, 2 + static_cast<int>(rng() % 40), precision);
            c.require(root.width() <= precision && defi.width() <= precision, "width above precision");
            // exact check: lo^(k-2) <= b/(k-1) <= hi^(k-2)
            auto m = static_cast<unsigned long>(k - 2);
            Rational target = b / (k - 1);
            c.require(power(root.lo, m) <= target && target <= power(root.hi, m), "root not enclosed");
        }
        return std::to_string(interval_samples) + " random samples";
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
