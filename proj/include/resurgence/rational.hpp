#ifndef RESURGENCE_RATIONAL_HPP
#define RESURGENCE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "resurgence/errors.hpp"

namespace resurgence {

/// Exact rational number. mpq_class keeps values canonical
/// (gcd(|num|, den) = 1, den > 0) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalisation).
inline Rational rational_from_string(std::string_view s) {
    if (s.empty())
        throw config_error("empty rational literal");
    Rational r;
    try {
        r = Rational(std::string(s));
    } catch (const std::invalid_argument&) {
        throw config_error("bad rational literal: '" + std::string(s) + "'");
    }
    r.canonicalize();
    if (r.get_den() <= 0)
        throw config_error("rational with nonpositive denominator: '" + std::string(s) + "'");
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Rational factorial_rat(unsigned long n) {
    return Rational(factorial(n));
}

/// Generalised binomial coefficient binom(a, k) for rational a.
inline Rational binomial(const Rational& a, unsigned k) {
    Rational num = 1;
    for (unsigned j = 0; j < k; ++j)
        num *= a - Rational(static_cast<long>(j));
    return num / factorial_rat(k);
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc = 1;
    while (n) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace resurgence

#endif
