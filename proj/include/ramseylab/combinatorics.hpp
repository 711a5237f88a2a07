#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ramseylab
{
    /// C(n, k) as an unsigned 64-bit value. Throws too_large on overflow.
    auto binomial(std::int64_t n, std::int64_t k) -> std::uint64_t;

    /// Calls visit on every k-subset of {0..n-1} in lexicographic order.
    /// The callback returns false to stop early.
    void for_each_subset(int n, int k, const std::function<bool(std::span<const int>)> & visit);

    /// Calls visit on every k-subset of pool (pool ascending) in lexicographic order.
    void for_each_subset_of(std::span<const int> pool, int k, const std::function<bool(std::span<const int>)> & visit);

    /// Position of an ascending k-subset of {0..n-1} in lexicographic order.
    auto lex_rank(std::span<const int> subset, int n) -> std::uint64_t;
}
