#pragma once

// Exact rational scalars over Q. No floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace vxa {

using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

inline Scalar scalar_of(long n) { return Scalar(n); }

/// Canonical "p/q" form, "p" when the denominator is 1.
inline std::string to_string(const Scalar& s) { return s.str(); }

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on garbage.
inline Scalar parse_scalar(const std::string& text) {
    try {
        Scalar s(text);
        return s;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// binomial(n, k) for n >= 0.
inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);   // exact at every step
    }
    return r;
}

/// Generalized binomial C(m, k) = m(m-1)...(m-k+1)/k! for any integer m, k >= 0.
inline Integer gen_binomial(long long m, unsigned long k) {
    Integer num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= Integer(m) - Integer(i);
    return num / factorial(static_cast<unsigned>(k));
}

}  // namespace vxa
