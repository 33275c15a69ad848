/**
 * Exact rational scalar type with decimal-string parsing and formatting.
 *
 * Coordinates enter the library as decimal strings ("0.25", "-1e-3") or
 * fraction strings ("1/3") and are held exactly as arbitrary-precision
 * rationals, so every geometric predicate downstream is decided by the
 * sign of an exact integer determinant.
 */

#ifndef SHAPECX_RATIONAL_HPP
#define SHAPECX_RATIONAL_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "shapecx/error.hpp"

namespace shapecx {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Floor of n / d for exact integers, correct for negative operands. */
inline BigInt floor_div(const BigInt& n, const BigInt& d)
{
    BigInt q = n / d;
    if ((n % d) != 0 && ((n < 0) != (d < 0)))
        --q;
    return q;
}

/** Largest integer <= r. */
inline BigInt rational_floor(const Rational& r)
{
    return floor_div(numerator(r), denominator(r));
}

/** Smallest integer >= r. */
inline BigInt rational_ceil(const Rational& r)
{
    return -rational_floor(-r);
}

namespace detail {

inline bool parse_digits(std::string_view s, std::size_t& pos, BigInt& out,
                         std::size_t& count)
{
    count = 0;
    out   = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        out = out * 10 + (s[pos] - '0');
        ++pos;
        ++count;
    }
    return count > 0;
}

inline BigInt pow10(std::size_t e)
{
    BigInt p = 1;
    for (std::size_t i = 0; i < e; ++i)
        p *= 10;
    return p;
}

// Decimal literal with optional sign, fraction part and exponent.
inline Rational parse_decimal(std::string_view s)
{
    std::size_t pos  = 0;
    bool        neg  = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }

    BigInt      mantissa   = 0;
    std::size_t int_count  = 0;
    std::size_t frac_count = 0;
    detail::parse_digits(s, pos, mantissa, int_count);

    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        BigInt frac;
        if (!detail::parse_digits(s, pos, frac, frac_count) && int_count == 0)
            throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                        "no digits in \"" + std::string(s) + "\"");
        mantissa = mantissa * pow10(frac_count) + frac;
    }
    if (int_count == 0 && frac_count == 0)
        throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                    "no digits in \"" + std::string(s) + "\"");

    std::int64_t exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            eneg = (s[pos] == '-');
            ++pos;
        }
        BigInt      e;
        std::size_t ecount;
        if (!detail::parse_digits(s, pos, e, ecount))
            throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                        "empty exponent in \"" + std::string(s) + "\"");
        if (e > 100000)
            throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                        "exponent out of range in \"" + std::string(s) + "\"");
        exponent = e.convert_to<std::int64_t>();
        if (eneg)
            exponent = -exponent;
    }
    if (pos != s.size())
        throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                    "trailing characters in \"" + std::string(s) + "\"");

    std::int64_t shift = exponent - static_cast<std::int64_t>(frac_count);
    Rational     value(mantissa);
    if (shift > 0)
        value *= Rational(pow10(static_cast<std::size_t>(shift)));
    else if (shift < 0)
        value /= Rational(pow10(static_cast<std::size_t>(-shift)));
    return neg ? -value : value;
}

}   // namespace detail

/**
 * Parses a scalar from a decimal string or a "p/q" fraction string.
 *
 * Accepted forms: "12", "-0.375", "2.5e-3", "1/3", "-7/2".  The value is
 * represented exactly; parsing never rounds.  Throws NUMBER_PARSE_ERROR on
 * malformed input or a zero denominator.
 */
inline Rational parse_rational(std::string_view s)
{
    if (s.empty())
        throw Error(ErrorCode::NUMBER_PARSE_ERROR, "empty number string");
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return detail::parse_decimal(s);

    Rational num = detail::parse_decimal(s.substr(0, slash));
    Rational den = detail::parse_decimal(s.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                    "zero denominator in \"" + std::string(s) + "\"");
    return num / den;
}

/**
 * Formats a rational exactly.
 *
 * Values whose reduced denominator is of the form 2^a * 5^b are printed as
 * terminating decimals ("0.375"); all others fall back to "p/q".  The output
 * round-trips through parse_rational without loss.
 */
inline std::string format_rational(const Rational& r)
{
    BigInt num = numerator(r);
    BigInt den = denominator(r);

    BigInt      d     = den;
    std::size_t twos  = 0;
    std::size_t fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1)
        return num.str() + "/" + den.str();

    // Scale so that value = scaled / 10^places with places = max(twos, fives).
    std::size_t places = twos > fives ? twos : fives;
    BigInt      scaled = num;
    for (std::size_t i = 0; i < places - twos; ++i)
        scaled *= 2;
    for (std::size_t i = 0; i < places - fives; ++i)
        scaled *= 5;

    bool neg = scaled < 0;
    if (neg)
        scaled = -scaled;
    std::string digits = scaled.str();
    if (digits.size() <= places)
        digits.insert(0, places - digits.size() + 1, '0');

    std::string out;
    if (neg)
        out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        std::string frac = digits.substr(digits.size() - places);
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        if (!frac.empty())
            out += '.' + frac;
    }
    return out;
}

/**
 * Fixed-point decimal approximation with the given number of places,
 * rounding half to even.  Used where compact deterministic text is needed
 * (SVG coordinates) rather than exact round-tripping.
 */
inline std::string decimal_approx(const Rational& r, unsigned places)
{
    BigInt scale = detail::pow10(places);
    Rational scaled = r * Rational(scale);
    BigInt   f      = rational_floor(scaled);
    Rational rem    = scaled - Rational(f);

    if (rem > Rational(1, 2) || (rem == Rational(1, 2) && (f % 2) != 0))
        ++f;

    bool neg = f < 0;
    if (neg)
        f = -f;
    std::string digits = f.str();
    if (digits.size() <= places)
        digits.insert(0, places - digits.size() + 1, '0');

    std::string out;
    if (neg)
        out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0)
        out += '.' + digits.substr(digits.size() - places);
    return out;
}

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

}   // namespace shapecx

#endif
