#pragma once

#include <ramseylab/error.hpp>

namespace ramseylab
{
    template <typename Accept>
    auto root_enclosure(const Rational & value, unsigned long m, Accept && accept) -> Interval
    {
        if (value < 0 || value > 1 || m == 0)
            fail(ErrorCode::invalid_parameters, "root enclosure needs 0 <= value <= 1 and m >= 1");
        Rational root;
        if (exact_root(value, m, root))
            return Interval{root, root};

        Interval enclosure{Rational(0), Rational(1)};
        for (int step = 0; ! accept(enclosure); ++step) {
            if (step > 100'000)
                fail(ErrorCode::internal_error, "root bisection did not reach the requested precision");
            Rational mid = (enclosure.lo + enclosure.hi) / 2;
            if (power(mid, m) <= value)
                enclosure.lo = mid;
            else
                enclosure.hi = mid;
        }
        return enclosure;
    }
}
