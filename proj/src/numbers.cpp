#include "riffle/numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace riffle {

Int binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: n must be >= 0");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int binom_big(const Int& top, long k) {
    if (k < 0) return 0;
    if (top < k) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int falling(const Int& a, long r) {
    if (r < 0) throw std::invalid_argument("falling: r must be >= 0");
    Int result = 1;
    for (long i = 0; i < r; ++i) result *= a - i;
    return result;
}

Int falling(long a, long r) { return falling(Int(a), r); }

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int multinomial(long n, const std::vector<long>& parts) {
    Int r = factorial(n);
    long sum = 0;
    for (long p : parts) {
        r /= factorial(p);
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts must sum to n");
    return r;
}

namespace {

std::mutex bernoulli_mutex;

// B_0..B_k via sum_{j=0}^{k} C(k+1,j) B_j = 0, which pins B_1 = -1/2.
const Rational& bernoulli_cached(long k) {
    static std::vector<Rational> cache{Rational(1)};
    while (static_cast<long>(cache.size()) <= k) {
        long m = static_cast<long>(cache.size());
        Rational acc(0);
        for (long j = 0; j < m; ++j) acc += Rational(binom(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[k];
}

}  // namespace

Rational bernoulli(long k) {
    if (k < 0) throw std::invalid_argument("bernoulli: k must be >= 0");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    return bernoulli_cached(k);
}

Int stirling2(long r, long i) {
    if (r < 0 || i < 0) return 0;
    if (i > r) return 0;
    if (r == 0) return 1;  // {0 over 0}
    if (i == 0) return 0;
    // row DP: {r,i} = i*{r-1,i} + {r-1,i-1}
    std::vector<Int> row(r + 1, 0);
    row[0] = 1;  // row for r' = 0
    for (long rp = 1; rp <= r; ++rp) {
        for (long ip = rp; ip >= 1; --ip) row[ip] = ip * row[ip] + row[ip - 1];
        row[0] = 0;
    }
    return row[i];
}

Int eulerian(long n, long r) {
    if (n < 1) throw std::invalid_argument("eulerian: n must be >= 1");
    if (r < 0 || r >= n) return 0;
    // A(n,r) = (r+1) A(n-1,r) + (n-r) A(n-1,r-1)
    std::vector<Int> row{1};  // n' = 1
    for (long np = 2; np <= n; ++np) {
        std::vector<Int> next(np, 0);
        for (long rp = 0; rp < np; ++rp) {
            Int v = 0;
            if (rp < np - 1) v += (rp + 1) * row[rp];
            if (rp >= 1) v += (np - rp) * row[rp - 1];
            next[rp] = v;
        }
        row = std::move(next);
    }
    return row[r];
}

}  // namespace riffle
