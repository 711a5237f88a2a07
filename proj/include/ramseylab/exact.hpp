#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ramseylab
{
    using Integer = mpz_class;
    using Rational = mpq_class;

    /// Closed rational interval [lo, hi] enclosing some real value.
    struct Interval
    {
        Rational lo;
        Rational hi;

        auto width() const -> Rational { return hi - lo; }
        auto contains(const Rational & x) const -> bool { return lo <= x && x <= hi; }
        auto exact() const -> bool { return lo == hi; }
    };

    /// Canonical num/den (mpq values must be canonical before comparison).
    auto ratio(long num, long den) -> Rational;

    auto power(const Rational & base, unsigned long exponent) -> Rational;

    auto binomial_exact(long n, long k) -> Integer;

    /// Accepts "p", "p/q", decimals "0.96" and scientific "1e-9".
    auto parse_rational(std::string_view text) -> Rational;

    /// Canonical "p/q" (or "p" for integers).
    auto to_string(const Rational & q) -> std::string;

    /// Decimal rendering with the given significant digits, rounded down
    /// (upward = false) or up (upward = true).
    auto to_decimal(const Rational & q, int digits, bool upward) -> std::string;

    /// Exact m-th root of a nonnegative rational, when it is rational.
    auto exact_root(const Rational & value, unsigned long m, Rational & root) -> bool;

    /// Enclosure of value^(1/m) for 0 <= value <= 1 by bisection of [0, 1],
    /// bisected until accept(interval) holds. Each step halves the interval,
    /// so smaller targets refine earlier enclosures.
    template <typename Accept>
    auto root_enclosure(const Rational & value, unsigned long m, Accept && accept) -> Interval;
}

#include <ramseylab/exact_impl.hpp>
