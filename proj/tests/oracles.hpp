#pragma once

// Brute-force reference implementations. They share no code with the library
// so that agreement between the two is meaningful.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle
{
    using Set = std::vector<int>;

    // k-subsets of {0..n-1} in lexicographic order
    inline auto subsets(int n, int k) -> std::vector<Set>
    {
        std::vector<Set> out;
        Set cur;
        std::function<void(int)> grow = [&](int next) {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int v = next; v < n; ++v) {
                cur.push_back(v);
                grow(v + 1);
                cur.pop_back();
            }
        };
        grow(0);
        return out;
    }

    inline auto meet(const Set & a, const Set & b) -> int
    {
        int count = 0;
        for (int x : a)
            count += static_cast<int>(std::count(b.begin(), b.end(), x));
        return count;
    }

    inline auto is_loose3(const Set & a, const Set & b, const Set & c) -> bool
    {
        return meet(a, b) == 1 && meet(b, c) == 1 && meet(a, c) == 0;
    }

    inline auto has_loose3(const std::vector<Set> & edges) -> bool
    {
        for (auto & a : edges)
            for (auto & b : edges)
                for (auto & c : edges)
                    if (&a != &b && &b != &c && &a != &c && is_loose3(a, b, c))
                        return true;
        return false;
    }

    inline auto has_loose2(const std::vector<Set> & edges) -> bool
    {
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (meet(edges[i], edges[j]) == 1)
                    return true;
        return false;
    }

    // Unordered copies: a 3-path and its reversal count once.
    inline auto path_copies(int n, int k, int length) -> std::set<std::vector<Set>>
    {
        auto all = subsets(n, k);
        std::set<std::vector<Set>> copies;
        for (auto & a : all)
            for (auto & b : all) {
                if (length == 2) {
                    if (a < b && meet(a, b) == 1)
                        copies.insert({a, b});
                    continue;
                }
                for (auto & c : all)
                    if (is_loose3(a, b, c))
                        copies.insert(std::min(std::vector<Set>{a, b, c}, std::vector<Set>{c, b, a}));
            }
        return copies;
    }

    // Maximum pattern-free edge count over every subset of the complete k-graph.
    inline auto turan(int n, int k, int length) -> std::size_t
    {
        auto all = subsets(n, k);
        std::vector<std::uint64_t> forbidden;
        for (auto & copy : path_copies(n, k, length)) {
            std::uint64_t m = 0;
            for (auto & e : copy)
                m |= std::uint64_t{1} << (std::find(all.begin(), all.end(), e) - all.begin());
            forbidden.push_back(m);
        }
        int best = 0;
        std::uint64_t total = std::uint64_t{1} << all.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            int size = __builtin_popcountll(mask);
            if (size <= best)
                continue;
            if (std::none_of(forbidden.begin(), forbidden.end(), [&](auto f) { return (mask & f) == f; }))
                best = size;
        }
        return static_cast<std::size_t>(best);
    }

    // Satisfiability of a DIMACS ramsey instance by enumerating one color per edge.
    // The variable map is read back from the comment lines.
    struct Dimacs
    {
        int variables = 0;
        std::vector<std::vector<int>> clauses;
        std::map<int, std::pair<Set, int>> meaning;
    };

    inline auto parse_dimacs(const std::string & text) -> Dimacs
    {
        Dimacs d;
        std::istringstream in(text);
        std::string line;
        std::size_t declared = 0;
        while (std::getline(in, line)) {
            std::istringstream row(line);
            std::string head;
            row >> head;
            if (head == "c") {
                std::string word;
                int var;
                if (! (row >> word >> var) || word != "var")
                    continue;
                std::string eq, edge_word, tok;
                row >> eq >> edge_word;
                Set e;
                while (row >> tok && tok != "color")
                    e.push_back(std::stoi(tok));
                int color;
                row >> color;
                d.meaning[var] = {e, color};
            }
            else if (head == "p") {
                std::string cnf;
                row >> cnf >> d.variables >> declared;
            }
            else if (! head.empty()) {
                std::vector<int> clause{std::stoi(head)};
                int lit;
                while (row >> lit)
                    clause.push_back(lit);
                clause.pop_back(); // trailing 0
                d.clauses.push_back(clause);
            }
        }
        if (d.clauses.size() != declared)
            throw std::runtime_error("clause count does not match header");
        return d;
    }

    inline auto satisfiable_by_colorings(const Dimacs & d, int n, int k, int r) -> bool
    {
        auto edges = subsets(n, k);
        std::map<Set, std::size_t> index;
        for (std::size_t i = 0; i < edges.size(); ++i)
            index[edges[i]] = i;
        std::vector<std::pair<int, std::pair<std::size_t, int>>> vars;
        for (auto & [var, meaning] : d.meaning)
            vars.push_back({var, {index.at(meaning.first), meaning.second}});
        std::vector<int> colors(edges.size(), 1);
        std::vector<char> value(static_cast<std::size_t>(d.variables) + 1, 0);
        for (;;) {
            for (auto & [var, at] : vars)
                value[static_cast<std::size_t>(var)] = colors[at.first] == at.second;
            bool all = std::all_of(d.clauses.begin(), d.clauses.end(), [&](auto & clause) {
                return std::any_of(clause.begin(), clause.end(), [&](int lit) {
                    return lit > 0 ? value[static_cast<std::size_t>(lit)] : ! value[static_cast<std::size_t>(-lit)];
                });
            });
            if (all)
                return true;
            std::size_t i = colors.size();
            while (i > 0 && colors[i - 1] == r)
                colors[--i] = 1;
            if (i == 0)
                return false;
            ++colors[i - 1];
        }
    }

    // Densest vertex subset by |E(S)|/|S| over all nonempty S; returns the best ratio as (num, den).
    inline auto max_density(int n, const std::vector<Set> & edges) -> std::pair<long, long>
    {
        std::pair<long, long> best{0, 1};
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            long inside = 0;
            for (auto & e : edges)
                inside += std::all_of(e.begin(), e.end(), [&](int v) { return s >> v & 1; });
            long size = __builtin_popcount(s);
            if (inside * best.second > best.first * size)
                best = {inside, size};
        }
        return best;
    }
}
