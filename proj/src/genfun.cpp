#include "riffle/genfun.hpp"

#include <mpfr.h>

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "riffle/numbers.hpp"

namespace riffle {

QPoly F_closed(long m, long n) {
    if (m < 0 || n < 0) throw std::invalid_argument("F_closed: arguments must be >= 0");
    if (m < n) std::swap(m, n);
    std::vector<Int> coeffs(m + n + 1, Int(0));
    for (long i = 0; i <= n; ++i) coeffs[m + n - i] = binom(m + n, i) - binom(m + n, i - 1);
    return QPoly(std::move(coeffs));
}

QPoly G_poly(long n) {
    if (n < 1) throw std::invalid_argument("G_poly: n must be >= 1");
    QPoly g = QPoly::monomial(n, 1);
    for (long i = 0; i <= n - 2; ++i) g += F_closed(n - 1 - i, i);
    return g;
}

namespace {

std::mutex dpoly_mutex;

const QPoly& dpoly_cached(long n) {
    static std::vector<QPoly> cache{QPoly::one()};  // D_0 = 1
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        cache.push_back(cache[m - 1].shifted(1) + G_poly(m));
    }
    return cache[n];
}

}  // namespace

QPoly D_poly(long n) {
    if (n < 0) throw std::invalid_argument("D_poly: n must be >= 0");
    std::lock_guard<std::mutex> lock(dpoly_mutex);
    return dpoly_cached(n);
}

Int G_deriv_closed(long r, long n) {
    if (r < 1) throw std::invalid_argument("G_deriv_closed: r must be >= 1");
    if (n < 2) throw std::invalid_argument("G_deriv_closed: n must be >= 2");
    if (n % 2 == 0) {
        long k = n / 2;
        Int s = falling(2 * k, r) - falling(2 * k - 1, r);
        for (long i = 0; i <= k - 1; ++i)
            s += 2 * (k - i) * (binom(2 * k - 1, i) - binom(2 * k - 1, i - 1)) *
                 falling(2 * k - 1 - i, r);
        return s;
    }
    long k = (n - 1) / 2;
    // the odd-n weight k + 1/2 - i is doubled into 2k + 1 - 2i to stay integral
    Int s = falling(2 * k + 1, r) - falling(2 * k, r);
    for (long i = 0; i <= k; ++i)
        s += (2 * k + 1 - 2 * i) * (binom(2 * k, i) - binom(2 * k, i - 1)) * falling(2 * k - i, r);
    return s;
}

namespace {

// G_n^{(r)}(1) for every n >= 1 (the recurrence needs n = 1 too, where
// G_1 = q).
Int g_deriv_any(long r, long n) {
    if (r == 0) return Int(1) << (n - 1);  // G_n(1) = 2^{n-1}
    if (n == 1) return falling(1, r);
    return G_deriv_closed(r, n);
}

}  // namespace

Int D_deriv_at1(long r, long n) {
    if (r < 0 || n < 0) throw std::invalid_argument("D_deriv_at1: arguments must be >= 0");
    if (r == 0) return Int(1) << n;
    // row by row in r; row r at deck size m needs row r-1 at m-1
    std::vector<Int> prev(n + 1);  // r' = 0
    for (long m = 0; m <= n; ++m) prev[m] = Int(1) << m;
    std::vector<Int> cur(n + 1);
    for (long rp = 1; rp <= r; ++rp) {
        cur[0] = 0;  // D_0 = 1 has vanishing derivatives
        for (long m = 1; m <= n; ++m) cur[m] = cur[m - 1] + rp * prev[m - 1] + g_deriv_any(rp, m);
        prev = cur;
    }
    return cur[n];
}

MomentTable exact_moments(long n, long r_max) {
    if (n < 1) throw std::invalid_argument("exact_moments: n must be >= 1");
    if (r_max < 1) throw std::invalid_argument("exact_moments: r_max must be >= 1");
    MomentTable t;
    t.n = n;
    Int half_weight = Int(1) << n;
    t.factorial.reserve(r_max + 1);
    for (long r = 0; r <= r_max; ++r)
        t.factorial.push_back(make_rational(D_deriv_at1(r, n), half_weight));

    t.raw.reserve(r_max + 1);
    for (long r = 0; r <= r_max; ++r) {
        Rational s(0);
        for (long i = 0; i <= r; ++i) s += Rational(stirling2(r, i)) * t.factorial[i];
        t.raw.push_back(s);
    }

    const Rational& mu = t.raw[1];
    t.central.reserve(r_max + 1);
    for (long r = 0; r <= r_max; ++r) {
        Rational s(0);
        Rational neg_mu_pow(1);  // (-mu)^{r-j}, built from j = r downwards
        for (long j = r; j >= 0; --j) {
            s += Rational(binom(r, j)) * t.raw[j] * neg_mu_pow;
            neg_mu_pow *= -mu;
        }
        t.central.push_back(s);
    }
    t.central[1] = 0;  // exact by construction; keep the canonical zero
    return t;
}

Skewness exact_skewness(long n) {
    if (n < 2) throw std::invalid_argument("exact_skewness: n must be >= 2");
    MomentTable t = exact_moments(n, 3);
    Skewness s;
    s.m2 = t.central[2];
    s.m3 = t.central[3];
    if (s.m2 == 0) throw std::domain_error("exact_skewness: degenerate distribution (m2 = 0)");

    mpfr_t m2f, m3f, denom;
    mpfr_inits2(128, m2f, m3f, denom, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(m2f, s.m2.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(m3f, s.m3.get_mpq_t(), MPFR_RNDN);
    mpfr_pow_ui(denom, m2f, 3, MPFR_RNDN);
    mpfr_sqrt(denom, denom, MPFR_RNDN);
    mpfr_div(m3f, m3f, denom, MPFR_RNDN);
    s.value = mpfr_get_d(m3f, MPFR_RNDN);
    mpfr_clears(m2f, m3f, denom, static_cast<mpfr_ptr>(nullptr));
    return s;
}

nlohmann::ordered_json to_json(const MomentTable& t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    auto rats = [](const std::vector<Rational>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const Rational& r : v) a.push_back(to_string(r));
        return a;
    };
    j["factorial"] = rats(t.factorial);
    j["raw"] = rats(t.raw);
    j["central"] = rats(t.central);
    return j;
}

std::string dpoly_csv(long n) {
    QPoly d = D_poly(n);
    Int total = Int(1) << n;
    std::ostringstream os;
    os << "correct_guesses,count,probability\n";
    for (long i = 0; i <= d.degree(); ++i) {
        if (d.coeff(i) == 0) continue;
        os << i << "," << d.coeff(i).get_str() << ","
           << to_string(make_rational(d.coeff(i), total)) << "\n";
    }
    return os.str();
}

}  // namespace riffle
