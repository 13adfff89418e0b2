#pragma once

#include <gmpxx.h>

#include <string>

namespace riffle {

// Arbitrary-precision integer and exact fraction. All probabilities, moments
// and polynomial coefficients in this library live in these two types; no
// floating point ever enters a result unless a function explicitly says so.
using Int = mpz_class;
using Rational = mpq_class;

// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as they are built through arithmetic; fractions assembled from raw
// numerator/denominator go through here.
inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Accepts "a/b", plain integers, decimals ("0.05") and percentages ("5%").
Rational parse_rational(const std::string& text);

}  // namespace riffle
