#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace haarperm {

// All exact arithmetic runs on arbitrary-precision rationals. Dyadic
// measures, Carleson constants and norm values stay exact as long as the
// exponent is an integer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact rational, e may be negative.
inline Rational pow2(long e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(1, BigInt(1) << -e);
}

/// r^k for small nonnegative k.
inline Rational rational_pow(const Rational& r, unsigned k) {
    Rational acc(1);
    Rational base = r;
    while (k != 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string rational_to_string(const Rational& r);

/// Parses "num", "num/den", or a decimal integer with sign. Throws
/// Error(InvalidArgument) on anything else (including den == 0).
Rational rational_from_string(const std::string& text);

}  // namespace haarperm
