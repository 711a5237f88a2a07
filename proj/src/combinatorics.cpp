#include <ramseylab/combinatorics.hpp>
#include <ramseylab/error.hpp>

#include <limits>
#include <numeric>

namespace ramseylab
{
    auto binomial(std::int64_t n, std::int64_t k) -> std::uint64_t
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        std::uint64_t result = 1;
        for (std::int64_t i = 1; i <= k; ++i) {
            // result * (n - k + i) / i, reduced first so the product stays small
            std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
            std::uint64_t den = static_cast<std::uint64_t>(i);
            auto g = std::gcd(result, den);
            auto r = result / g;
            den /= g;
            num /= den;
            if (r != 0 && num > std::numeric_limits<std::uint64_t>::max() / r)
                throw Error(ErrorCode::too_large, "binomial coefficient overflows 64 bits");
            result = r * num;
        }
        return result;
    }

    void for_each_subset_of(std::span<const int> pool, int k, const std::function<bool(std::span<const int>)> & visit)
    {
        int n = static_cast<int>(pool.size());
        if (k < 0 || k > n)
            return;
        std::vector<int> pos(k), subset(k);
        std::iota(pos.begin(), pos.end(), 0);
        while (true) {
            for (int i = 0; i < k; ++i)
                subset[i] = pool[pos[i]];
            if (! visit(subset))
                return;
            int i = k - 1;
            while (i >= 0 && pos[i] == n - k + i)
                --i;
            if (i < 0)
                return;
            ++pos[i];
            for (int j = i + 1; j < k; ++j)
                pos[j] = pos[j - 1] + 1;
        }
    }

    void for_each_subset(int n, int k, const std::function<bool(std::span<const int>)> & visit)
    {
        std::vector<int> pool(std::max(n, 0));
        std::iota(pool.begin(), pool.end(), 0);
        for_each_subset_of(pool, k, visit);
    }

    auto lex_rank(std::span<const int> subset, int n) -> std::uint64_t
    {
        // count subsets that precede it: at each position, those with a smaller element there
        std::uint64_t rank = 0;
        int k = static_cast<int>(subset.size());
        int prev = -1;
        for (int i = 0; i < k; ++i) {
            for (int v = prev + 1; v < subset[i]; ++v)
                rank += binomial(n - v - 1, k - i - 1);
            prev = subset[i];
        }
        return rank;
    }
}
