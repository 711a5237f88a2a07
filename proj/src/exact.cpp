#include <ramseylab/error.hpp>
#include <ramseylab/exact.hpp>

#include <cctype>

namespace ramseylab
{
    auto ratio(long num, long den) -> Rational
    {
        if (den == 0)
            fail(ErrorCode::invalid_parameters, "zero denominator");
        Rational q(num, 1);
        q /= Rational(den, 1);
        return q;
    }

    auto power(const Rational & base, unsigned long exponent) -> Rational
    {
        Rational result;
        mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
        mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
        result.canonicalize();
        return result;
    }

    auto binomial_exact(long n, long k) -> Integer
    {
        Integer result;
        if (k < 0 || n < 0 || k > n)
            return 0;
        mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return result;
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        auto bad = [&]() { return Error(ErrorCode::invalid_parameters, "not a rational number: '" + std::string(text) + "'"); };
        std::string s(text);
        if (s.empty())
            throw bad();
        try {
            if (s.find('/') != std::string::npos) {
                Rational q(s, 10);
                if (q.get_den() == 0)
                    throw bad();
                q.canonicalize();
                return q;
            }
            std::size_t i = 0;
            bool negative = false;
            if (s[i] == '+' || s[i] == '-')
                negative = s[i++] == '-';
            std::string digits;
            long scale = 0;
            bool seen_point = false, seen_digit = false;
            for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
                if (s[i] == '.' && ! seen_point)
                    seen_point = true;
                else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                    digits += s[i];
                    seen_digit = true;
                    if (seen_point)
                        --scale;
                }
                else
                    throw bad();
            }
            if (! seen_digit)
                throw bad();
            if (i < s.size()) {
                auto exponent = s.substr(i + 1);
                if (exponent.empty())
                    throw bad();
                std::size_t used = 0;
                scale += std::stol(exponent, &used);
                if (used != exponent.size())
                    throw bad();
            }
            if (scale > 100'000 || scale < -100'000)
                throw bad();
            Rational q{Integer(digits, 10)};
            Integer ten_power;
            mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
            if (scale < 0)
                q /= ten_power;
            else
                q *= ten_power;
            q.canonicalize();
            return negative ? Rational(-q) : q;
        }
        catch (const Error &) {
            throw;
        }
        catch (const std::exception &) {
            throw bad();
        }
    }

    auto to_string(const Rational & q) -> std::string
    {
        return q.get_str();
    }

    auto to_decimal(const Rational & q, int digits, bool upward) -> std::string
    {
        if (q == 0)
            return "0";
        if (q < 0) {
            auto s = to_decimal(-q, digits, ! upward);
            return "-" + s;
        }
        // q = mantissa * 10^(exponent - digits + 1), with mantissa holding `digits` digits
        long exponent = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 10)) - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 10));
        auto scaled_at = [&](long e) {
            long shift = digits - 1 - e;
            Integer ten;
            mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
            return shift >= 0 ? Rational(q * ten) : Rational(q / ten);
        };
        Integer lower_limit, upper_limit;
        mpz_ui_pow_ui(lower_limit.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
        upper_limit = lower_limit * 10;
        // the size estimate is off by at most one in each direction
        while (scaled_at(exponent) >= upper_limit)
            ++exponent;
        while (scaled_at(exponent) < lower_limit)
            --exponent;
        Rational scaled = scaled_at(exponent);
        Integer mantissa;
        if (upward)
            mpz_cdiv_q(mantissa.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        else
            mpz_fdiv_q(mantissa.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        if (mantissa == upper_limit) {
            mantissa = lower_limit;
            ++exponent;
        }
        auto m = mantissa.get_str();
        std::string result = m.substr(0, 1);
        if (m.size() > 1)
            result += "." + m.substr(1);
        return result + "e" + std::to_string(exponent);
    }

    auto exact_root(const Rational & value, unsigned long m, Rational & root) -> bool
    {
        if (value < 0 || m == 0)
            return false;
        Integer num, den;
        if (mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), m) == 0)
            return false;
        if (mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), m) == 0)
            return false;
        root = Rational(num, den);
        root.canonicalize();
        return true;
    }
}
