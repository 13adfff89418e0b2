#pragma once

#include <string>
#include <vector>

#include "riffle/rational.hpp"

namespace riffle {

// Dense polynomial in q with arbitrary-precision integer coefficients.
// Index i holds the coefficient of q^i; trailing zeros are trimmed, so
// degree() is the index of the last nonzero entry (-1 for the zero poly).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return monomial(0, 1); }
    static QPoly monomial(long power, Int coeff);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(long i) const;            // zero outside the stored range
    const std::vector<Int>& coeffs() const { return c_; }

    QPoly& operator+=(const QPoly& rhs);
    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend bool operator==(const QPoly& lhs, const QPoly& rhs) { return lhs.c_ == rhs.c_; }

    QPoly shifted(long power) const;           // multiply by q^power
    Int at_one() const;                        // sum of coefficients

    std::string str() const;                   // "5q^2 + 6q^3 + 5q^4"

private:
    void trim();
    std::vector<Int> c_;
};

// r-th derivative of p evaluated at q = 1, computed exactly as
// sum_i a_i * falling(i, r). r = 0 gives the coefficient sum.
Int qpoly_deriv_at1(const QPoly& p, long r);

}  // namespace riffle
