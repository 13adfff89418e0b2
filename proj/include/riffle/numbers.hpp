#pragma once

#include <vector>

#include "riffle/rational.hpp"

namespace riffle {

// C(n,k); zero when k < 0 or k > n.
Int binom(long n, long k);

// Binomial with an arbitrary-precision top argument and small k.
// Combinatorial convention: zero whenever top < k (no negative-top extension).
Int binom_big(const Int& top, long k);

// Falling factorial a(a-1)...(a-r+1); empty product for r = 0.
Int falling(const Int& a, long r);
Int falling(long a, long r);

Int factorial(long n);

// n! / (l_1! l_2! ... l_t!) for a composition l of n.
Int multinomial(long n, const std::vector<long>& parts);

// Bernoulli number B_k with the B_1 = -1/2 convention.
Rational bernoulli(long k);

// Stirling number of the second kind {r over i}.
Int stirling2(long r, long i);

// Eulerian number A(n,r): permutations of length n with r descents.
Int eulerian(long n, long r);

}  // namespace riffle
