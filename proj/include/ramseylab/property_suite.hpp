#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ramseylab
{
    struct PropertyResult
    {
        std::string name;
        int instances = 0;
        int failures = 0;
        std::string first_failure;
    };

    /// Random instances (n <= 20, k <= 5) for each machinery operation, with
    /// postconditions re-checked from scratch. Same seed, same instances.
    auto run_machinery_properties(std::uint64_t seed, int count) -> std::vector<PropertyResult>;
}
