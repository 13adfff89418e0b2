#include "riffle/shuffle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "riffle/errors.hpp"
#include "riffle/numbers.hpp"

namespace riffle {

EnumLimits EnumLimits::defaults() {
    static EnumLimits limits = [] {
        EnumLimits l;
        if (const char* env = std::getenv("RIFFLE_ENUM_BUDGET")) {
            int v = std::atoi(env);
            if (v >= 1) l.k_shuffle_max_n = v;
        }
        return l;
    }();
    return limits;
}

DeckDistribution enumerate_one_shuffle(int n, const EnumLimits& limits) {
    if (n < 1) throw std::invalid_argument("enumerate_one_shuffle: n must be >= 1");
    if (n > limits.one_shuffle_max_n)
        throw budget_error("enumerate_one_shuffle: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limits.one_shuffle_max_n));

    DeckDistribution d;
    d.n = n;
    d.k = 1;
    d.total = Int(1) << n;

    // Each n-bit mask is one cut/interleave history: popcount(mask) is the
    // cut, set bits receive the top pile 1..t in order, clear bits the rest.
    std::vector<int> deck(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        int t = std::popcount(mask);
        int top = 1, bottom = t + 1;
        for (int pos = 0; pos < n; ++pos)
            deck[pos] = (mask >> pos) & 1 ? top++ : bottom++;
        d.entries[Permutation(deck)] += 1;
    }
    return d;
}

Int multiplicity(const Permutation& p, int k) {
    if (k < 0) throw std::invalid_argument("multiplicity: k must be >= 0");
    int m = rising_sequences(p);
    Int piles = Int(1) << k;
    if (m > piles) return 0;
    return binom_big(p.size() + piles - m, p.size());
}

DeckDistribution enumerate_k_shuffles(int n, int k, const EnumLimits& limits) {
    if (n < 1) throw std::invalid_argument("enumerate_k_shuffles: n must be >= 1");
    if (k < 0) throw std::invalid_argument("enumerate_k_shuffles: k must be >= 0");
    if (n > limits.k_shuffle_max_n)
        throw budget_error("enumerate_k_shuffles: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limits.k_shuffle_max_n));

    DeckDistribution d;
    d.n = n;
    d.k = k;
    mpz_ui_pow_ui(d.total.get_mpz_t(), 2, static_cast<unsigned long>(k) * n);

    // Multiplicity depends on p only through its rising-sequence count.
    Int piles = Int(1) << k;
    std::vector<Int> by_m(n + 1, Int(0));
    for (int m = 1; m <= n; ++m)
        if (m <= piles) by_m[m] = binom_big(n + piles - m, n);

    Permutation p = Permutation::identity(n);
    do {
        const Int& mult = by_m[rising_sequences(p)];
        if (mult > 0) d.entries.emplace(p, mult);
    } while (std::next_permutation(p.cards.begin(), p.cards.end()));
    return d;
}

std::pair<Int, Int> worpitzky_total(int n, int k) {
    if (n < 1) throw std::invalid_argument("worpitzky_total: n must be >= 1");
    Int lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 2, static_cast<unsigned long>(k) * n);
    Int piles = Int(1) << k;
    Int rhs = 0;
    for (int m = 1; m <= n; ++m) rhs += eulerian(n, m - 1) * binom_big(n + piles - m, n);
    return {lhs, rhs};
}

namespace {

// Uniform draw from [0, m) by rejection; mt19937_64 output is standardized,
// so samples are reproducible across platforms (std distributions are not).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t m) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % m;
}

std::vector<int> riffle_once(const std::vector<int>& deck, std::mt19937_64& rng) {
    int n = static_cast<int>(deck.size());
    int t = 0;
    for (int i = 0; i < n; ++i) t += static_cast<int>(rng() & 1);

    std::vector<int> out;
    out.reserve(n);
    std::size_t a = 0, b = t;  // next index within the top / bottom pile
    while (out.size() < deck.size()) {
        std::uint64_t left_top = t - a, left_bottom = n - b;
        if (left_top == 0) {
            out.push_back(deck[b++]);
        } else if (left_bottom == 0) {
            out.push_back(deck[a++]);
        } else if (draw_below(rng, left_top + left_bottom) < left_top) {
            out.push_back(deck[a++]);
        } else {
            out.push_back(deck[b++]);
        }
    }
    return out;
}

}  // namespace

Permutation sample_gsr(int n, int k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_gsr: n must be >= 1");
    if (k < 0) throw std::invalid_argument("sample_gsr: k must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<int> deck = Permutation::identity(n).cards;
    for (int i = 0; i < k; ++i) deck = riffle_once(deck, rng);
    return Permutation(std::move(deck));
}

nlohmann::ordered_json to_json(const DeckDistribution& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    j["k"] = d.k;
    j["total"] = to_string(d.total);
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [perm, mult] : d.entries) {
        nlohmann::ordered_json e;
        e["perm"] = perm.cards;
        e["mult"] = to_string(mult);
        entries.push_back(std::move(e));
    }
    return j;
}

}  // namespace riffle
