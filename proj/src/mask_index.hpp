#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ramseylab::detail
{
    using Mask = std::uint64_t;

    inline auto bit(int v) -> Mask { return Mask{1} << v; }

    template <typename F>
    inline void for_each_bit(Mask m, F && f)
    {
        while (m) {
            f(std::countr_zero(m));
            m &= m - 1;
        }
    }

    /// Edges of one hypergraph kept per vertex, with LIFO removal so that
    /// backtracking can undo additions cheaply.
    class IncidenceIndex
    {
    public:
        explicit IncidenceIndex(int n) :
            by_vertex_(n)
        {
        }

        void add(Mask e)
        {
            for_each_bit(e, [&](int v) { by_vertex_[v].push_back(e); });
        }

        void remove_last(Mask e)
        {
            for_each_bit(e, [&](int v) { by_vertex_[v].pop_back(); });
        }

        /// Would adding e create two edges meeting in exactly one vertex?
        auto closes_path2(Mask e) const -> bool
        {
            bool found = false;
            for_each_bit(e, [&](int a) {
                if (! found)
                    for (auto f : by_vertex_[a])
                        if (std::popcount(f & e) == 1) {
                            found = true;
                            break;
                        }
            });
            return found;
        }

        /// Would adding e create a loose 3-path, with e in the middle or at an end?
        auto closes_path3(Mask e) const -> bool
        {
            return closes_as_middle(e) || closes_as_end(e);
        }

    private:
        auto closes_as_middle(Mask e) const -> bool
        {
            // outer[a]: edges through a meeting e only in a
            thread_local std::vector<std::vector<Mask>> outer;
            if (outer.size() < by_vertex_.size())
                outer.resize(by_vertex_.size());
            int vertices[64];
            int count = 0;
            for_each_bit(e, [&](int a) {
                auto & list = outer[a];
                list.clear();
                for (auto f : by_vertex_[a])
                    if ((f & e) == bit(a))
                        list.push_back(f);
                if (! list.empty())
                    vertices[count++] = a;
            });
            for (int i = 0; i < count; ++i)
                for (int j = i + 1; j < count; ++j)
                    for (auto f : outer[vertices[i]])
                        for (auto g : outer[vertices[j]])
                            if ((f & g) == 0)
                                return true;
            return false;
        }

        auto closes_as_end(Mask e) const -> bool
        {
            bool found = false;
            for_each_bit(e, [&](int x) {
                if (found)
                    return;
                for (auto middle : by_vertex_[x]) {
                    if ((middle & e) != bit(x))
                        continue;
                    for_each_bit(middle & ~bit(x), [&](int y) {
                        if (found)
                            return;
                        for (auto last : by_vertex_[y])
                            if ((last & middle) == bit(y) && (last & e) == 0) {
                                found = true;
                                return;
                            }
                    });
                    if (found)
                        return;
                }
            });
            return found;
        }

        std::vector<std::vector<Mask>> by_vertex_;
    };
}
