#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace kchar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Requires an integral value; use before narrowing to long.
inline long long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer: " + r.str());
    return static_cast<long long>(numerator(r));
}

inline long long to_long(const Int& n) { return static_cast<long long>(n); }

// Half-integers are stored as doubled integers throughout; these convert
// between the two representations.
inline Rational from_doubled(long long twice) { return Rational(twice, 2); }

inline bool is_half_odd_integer(const Rational& r) {
    // membership in 1/2 + Z
    return denominator(r) == 2;
}

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q" and a leading sign. Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// binomial(n, k) with the vanishing convention used by the coefficient
// formulas: zero unless n is an integer >= 0 (and k >= 0).
inline Rational binomial(const Rational& n, long k) {
    if (k < 0 || !is_integer(n) || n < 0) return 0;
    Rational result = 1;
    for (long i = 0; i < k; ++i) result *= (n - i) / (i + 1);
    return result;
}

}  // namespace kchar
