#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "reynolds/errors.hpp"

namespace reynolds {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar: always in lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q" in lowest terms, or just "p" for integers.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

/// Parses "p", "p/q" or "-p/q". The sign may sit on either component.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Int(std::string(text)));
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0)
            throw PreconditionViolated("zero denominator in rational literal");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw PreconditionViolated("malformed rational literal: " + std::string(text));
    }
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// C(n, k), zero outside the Pascal triangle.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace reynolds
