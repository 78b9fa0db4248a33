#ifndef FLOERCONE_RATIONAL_HPP
#define FLOERCONE_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace floercone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(Rational const& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(Rational const& r) { return boost::multiprecision::denominator(r); }

/// num / den for any nonzero den (the two-argument constructor rejects den < 0).
inline Rational ratio(BigInt num, BigInt den)
{
    if (den < 0)
    {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline bool is_integer(Rational const& r) { return denominator(r) == 1; }

/// Largest integer not exceeding r.
BigInt floor(Rational const& r);

/// "p/q" or "p" when integral.
std::string to_string(Rational const& r);

/// Accepts "p", "p/q", "-p/q". Throws Error(Parse) otherwise.
Rational parse_rational(std::string const& text);

/// Floor division for machine integers (rounds toward negative infinity).
constexpr long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

constexpr long long positive_mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace floercone

#endif
