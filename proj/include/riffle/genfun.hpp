#pragma once

#include <string>
#include <vector>

#include "riffle/qpoly.hpp"
#include "riffle/rational.hpp"

#include "json.hpp"

namespace riffle {

// Correct-guess generating function for the subgame in which the revealed
// first card split the deck into increasing subsequences of lengths m and n:
// for m >= n, sum_{i=0}^{n} [C(m+n,i) - C(m+n,i-1)] q^{m+n-i}; symmetric in
// its arguments.
QPoly F_closed(long m, long n);

// G_n(q) = q^n + sum_{i=0}^{n-2} F(n-1-i, i; q).
QPoly G_poly(long n);

// Generating function of the number of correct guesses after one shuffle of
// an n-card deck: D_n = q D_{n-1} + G_n, D_0 = 1. Memoized.
QPoly D_poly(long n);

// r-th derivative of G_n at q = 1 via the parity-split binomial sums
// (even and odd n use different closed forms). Requires r >= 1, n >= 2.
Int G_deriv_closed(long r, long n);

// D_n^{(r)}(1) through the differentiated recurrence
// D_n^{(r)} = D_{n-1}^{(r)} + r D_{n-1}^{(r-1)} + G_n^{(r)}, seeded with
// D_n(1) = 2^n. Never materializes the polynomial.
Int D_deriv_at1(long r, long n);

// Exact factorial, raw and central moments of the correct-guess count.
struct MomentTable {
    long n = 0;
    std::vector<Rational> factorial;  // E[(X)_r], r = 0..r_max
    std::vector<Rational> raw;        // E[X^r]
    std::vector<Rational> central;    // E[(X - mu)^r]
};

MomentTable exact_moments(long n, long r_max = 12);

// m3 / m2^{3/2} evaluated in 128-bit floating point, with the exact central
// moments attached.
struct Skewness {
    Rational m2;
    Rational m3;
    double value = 0.0;
};

Skewness exact_skewness(long n);

nlohmann::ordered_json to_json(const MomentTable& t);

// "correct_guesses,count,probability" rows for the D_n distribution.
std::string dpoly_csv(long n);

}  // namespace riffle
