#include "riffle/strategy.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "riffle/errors.hpp"
#include "riffle/numbers.hpp"

namespace riffle {

int NextCardPmf::argmax_card() const {
    if (weights.empty()) throw infeasible_error("argmax_card: empty pmf");
    int best = 0;
    const Int* best_w = nullptr;
    for (const auto& [card, w] : weights) {    // ascending cards: ties keep the lowest
        if (!best_w || w > *best_w) {
            best = card;
            best_w = &w;
        }
    }
    return best;
}

int correct_guesses_one_shuffle(const Permutation& deck) {
    if (rising_sequences(deck) > 2)
        throw infeasible_error("correct_guesses_one_shuffle: deck not reachable by one shuffle");
    int n = deck.size();
    GuessState st;
    st.n = n;
    int correct = 0;
    for (int x : deck.cards) {
        int guess;
        if (!st.split_known) {
            guess = st.next_expected;
        } else {
            int a = st.low_hi - st.low_lo + 1;
            int b = st.high_hi - st.high_lo + 1;
            if (b > a)
                guess = st.high_lo;
            else
                guess = st.low_lo;   // longer lower range, or tie -> lower card
        }
        if (x == guess) ++correct;

        if (!st.split_known) {
            if (x == st.next_expected) {
                ++st.next_expected;
            } else {
                st.split_known = true;
                st.low_lo = st.next_expected;
                st.low_hi = x - 1;
                st.high_lo = x + 1;
                st.high_hi = n;
            }
        } else if (x == st.low_lo) {
            ++st.low_lo;
        } else {
            assert(x == st.high_lo);
            ++st.high_lo;
        }
        st.revealed.push_back(x);
    }
    return correct;
}

NextCardPmf first_card_pmf(int n) {
    if (n < 1) throw std::invalid_argument("first_card_pmf: n must be >= 1");
    NextCardPmf pmf;
    pmf.n = n;
    pmf.k = 1;
    pmf.denominator_weight = Int(1) << n;
    pmf.weights[1] = (Int(1) << (n - 1)) + 1;
    for (int m = 2; m <= n; ++m) pmf.weights[m] = binom(n - 1, m - 1);
    for (const auto& [card, w] : pmf.weights)
        pmf.probs[card] = make_rational(w, pmf.denominator_weight);
    return pmf;
}

Rational next_from_split(long a, long b) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("next_from_split: need a,b >= 0 with a+b >= 1");
    return make_rational(Int(a), Int(a + b));
}

namespace {

void check_revealed(int n, const std::vector<int>& revealed) {
    std::vector<bool> seen(n + 1, false);
    for (int c : revealed) {
        if (c < 1 || c > n || seen[c])
            throw std::invalid_argument("revealed cards must be distinct members of 1..n");
        seen[c] = true;
    }
}

}  // namespace

NextCardPmf bayes_next_pmf(int n, int k, const std::vector<int>& revealed,
                           const EnumLimits& limits) {
    if (n < 1) throw std::invalid_argument("bayes_next_pmf: n must be >= 1");
    if (k < 0) throw std::invalid_argument("bayes_next_pmf: k must be >= 0");
    if (n > limits.k_shuffle_max_n)
        throw budget_error("bayes_next_pmf: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limits.k_shuffle_max_n));
    check_revealed(n, revealed);
    if (static_cast<int>(revealed.size()) >= n)
        throw std::invalid_argument("bayes_next_pmf: no cards left to guess");

    Int piles = Int(1) << k;
    std::vector<Int> by_m(n + 1, Int(0));
    for (int m = 1; m <= n; ++m)
        if (m <= piles) by_m[m] = binom_big(n + piles - m, n);

    std::vector<int> suffix;
    std::vector<bool> used(n + 1, false);
    for (int c : revealed) used[c] = true;
    for (int c = 1; c <= n; ++c)
        if (!used[c]) suffix.push_back(c);

    NextCardPmf pmf;
    pmf.n = n;
    pmf.k = k;
    pmf.revealed = revealed;
    pmf.denominator_weight = 0;

    Permutation full;
    full.cards = revealed;
    full.cards.insert(full.cards.end(), suffix.begin(), suffix.end());
    std::size_t j = revealed.size();
    do {
        const Int& mult = by_m[rising_sequences(full)];
        if (mult > 0) {
            pmf.weights[full.cards[j]] += mult;
            pmf.denominator_weight += mult;
        }
    } while (std::next_permutation(full.cards.begin() + j, full.cards.end()));

    if (pmf.denominator_weight == 0)
        throw infeasible_error("bayes_next_pmf: no shuffle outcome extends the revealed prefix");
    for (auto it = pmf.weights.begin(); it != pmf.weights.end();) {
        if (it->second == 0) {
            it = pmf.weights.erase(it);
        } else {
            pmf.probs[it->first] = make_rational(it->second, pmf.denominator_weight);
            ++it;
        }
    }
    return pmf;
}

std::optional<Counterexample> find_min_counterexample(int k, int n_max, const EnumLimits& limits) {
    if (k < 1) throw std::invalid_argument("find_min_counterexample: k must be >= 1");
    if (n_max > limits.k_shuffle_max_n)
        throw budget_error("find_min_counterexample: n_max exceeds enumeration limit");

    for (int n = 2; n <= n_max; ++n) {
        Int piles = Int(1) << k;
        std::vector<Int> by_m(n + 1, Int(0));
        for (int m = 1; m <= n; ++m)
            if (m <= piles) by_m[m] = binom_big(n + piles - m, n);

        // one pass over S_n collects every (first card, second card) weight
        std::vector<std::vector<Int>> w2(n + 1, std::vector<Int>(n + 1, Int(0)));
        Permutation p = Permutation::identity(n);
        do {
            const Int& mult = by_m[rising_sequences(p)];
            if (mult > 0) w2[p.cards[0]][p.cards[1]] += mult;
        } while (std::next_permutation(p.cards.begin(), p.cards.end()));

        for (int c = 1; c <= n; ++c) {
            int a = c - 1, b = n - c;   // inferred ranges {1..c-1} and {c+1..n}
            int greedy = (b > a) ? c + 1 : 1;
            int bayes = 0;
            const Int* best = nullptr;
            for (int next = 1; next <= n; ++next) {
                if (next == c || w2[c][next] == 0) continue;
                if (!best || w2[c][next] > *best) {
                    bayes = next;
                    best = &w2[c][next];
                }
            }
            if (!best) continue;   // first card c unreachable
            if (greedy != bayes)
                return Counterexample{n, {c}, greedy, bayes};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// PrefixWeights

PrefixWeights::PrefixWeights(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > max_n) throw std::invalid_argument("PrefixWeights: n out of range");
    if (k < 0) throw std::invalid_argument("PrefixWeights: k must be >= 0");
    piles_ = Int(1) << k;
    mpz_ui_pow_ui(total_.get_mpz_t(), 2, static_cast<unsigned long>(k) * n);
    eulerian_rows_.resize(n + 1);
    eulerian_rows_[0] = {Int(1)};   // empty chain contributes nothing
    for (int len = 1; len <= n; ++len) {
        eulerian_rows_[len].resize(len);
        for (int r = 0; r < len; ++r) eulerian_rows_[len][r] = eulerian(len, r);
    }
}

int PrefixWeights::forced_descent_delta(std::uint32_t revealed_mask, int c) {
    // Revealing c places it after every revealed card and before every unseen
    // one; the pair (c-1, c) becomes a forced inverse descent iff c-1 is
    // still unseen.
    if (c < 2) return 0;
    return (revealed_mask >> (c - 2)) & 1 ? 0 : 1;
}

const std::vector<Int>& PrefixWeights::chain_descent_poly(std::uint32_t revealed_mask) {
    auto it = poly_cache_.find(revealed_mask);
    if (it != poly_cache_.end()) return it->second;

    // chains = maximal runs of consecutive unseen values
    std::vector<long> chains;
    int run = 0, unseen = 0;
    for (int c = 1; c <= n_; ++c) {
        if ((revealed_mask >> (c - 1)) & 1) {
            if (run > 0) chains.push_back(run);
            run = 0;
        } else {
            ++run;
            ++unseen;
        }
    }
    if (run > 0) chains.push_back(run);

    std::vector<Int> poly{multinomial(unseen, chains)};
    for (long len : chains) {
        const auto& row = eulerian_rows_[len];
        std::vector<Int> next(poly.size() + row.size() - 1, Int(0));
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; j < row.size(); ++j) next[i + j] += poly[i] * row[j];
        poly = std::move(next);
    }
    return poly_cache_.emplace(revealed_mask, std::move(poly)).first->second;
}

const Int& PrefixWeights::weight(std::uint32_t revealed_mask, int forced) {
    auto key = std::make_pair(revealed_mask, forced);
    auto it = weight_cache_.find(key);
    if (it != weight_cache_.end()) return it->second;

    // Completions with d extra within-chain descents have rising-sequence
    // count 1 + forced + d, hence multiplicity C(n + 2^k - 1 - forced - d, n).
    const std::vector<Int>& poly = chain_descent_poly(revealed_mask);
    Int w = 0;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        Int slack = piles_ - 1 - forced - static_cast<long>(d);
        if (slack < 0) break;
        w += poly[d] * binom_big(n_ + slack, n_);
    }
    return weight_cache_.emplace(key, std::move(w)).first->second;
}

int PrefixWeights::best_next(std::uint32_t revealed_mask, int forced, Int* best_weight) {
    int best = 0;
    const Int* best_w = nullptr;
    for (int c = 1; c <= n_; ++c) {
        if ((revealed_mask >> (c - 1)) & 1) continue;
        const Int& w = weight(revealed_mask | (1u << (c - 1)),
                              forced + forced_descent_delta(revealed_mask, c));
        if (!best_w || w > *best_w) {   // strict: ties keep the lowest card
            best = c;
            best_w = &w;
        }
    }
    if (!best_w || *best_w == 0)
        throw infeasible_error("best_next: no shuffle outcome extends this state");
    if (best_weight) *best_weight = *best_w;
    return best;
}

// ---------------------------------------------------------------------------

Rational expected_correct(int n, int k, const EnumLimits& limits) {
    if (n < 1) throw std::invalid_argument("expected_correct: n must be >= 1");
    if (k < 0) throw std::invalid_argument("expected_correct: k must be >= 0");
    if (n > limits.k_shuffle_max_n)
        throw budget_error("expected_correct: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(limits.k_shuffle_max_n));

    PrefixWeights pw(n, k);

    // Count ordered prefixes by (revealed set, forced descents); the Bayes
    // hit probability of a state depends on the state only through that
    // pair, so 2^{kn} E = sum over states of max_c weight(state + c).
    // Counts fit in 64 bits for every n this enumerates (n! <= 20!).
    std::uint32_t full = (n >= 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
    std::vector<std::vector<std::uint64_t>> count(full + 1);
    count[0] = std::vector<std::uint64_t>(1, 1);   // empty prefix, 0 forced descents

    Int numerator = 0;
    Int best_w;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (count[mask].empty()) continue;
        for (int forced = 0; forced < static_cast<int>(count[mask].size()); ++forced) {
            std::uint64_t c0 = count[mask][forced];
            if (c0 == 0) continue;
            if (mask != full) {
                if (pw.weight(mask, forced) == 0) continue;   // unreachable aggregate
                pw.best_next(mask, forced, &best_w);
                numerator += best_w * static_cast<long>(c0);
            }
            for (int c = 1; c <= n; ++c) {
                if ((mask >> (c - 1)) & 1) continue;
                std::uint32_t next_mask = mask | (1u << (c - 1));
                int next_forced = forced + PrefixWeights::forced_descent_delta(mask, c);
                auto& bucket = count[next_mask];
                if (static_cast<int>(bucket.size()) <= next_forced) bucket.resize(next_forced + 1, 0);
                bucket[next_forced] += c0;
            }
        }
        count[mask].clear();   // processed; free as we go
    }
    return make_rational(numerator, pw.total());
}

Rational harmonic_expectation(long n) {
    if (n < 1) throw std::invalid_argument("harmonic_expectation: n must be >= 1");
    Rational h(0);
    for (long i = 1; i <= n; ++i) h += make_rational(1L, i);
    return h;
}

int shuffles_needed(int n, const Rational& threshold, int k_max, const EnumLimits& limits) {
    if (threshold <= 0) throw std::invalid_argument("shuffles_needed: threshold must be > 0");
    Rational target = harmonic_expectation(n);
    for (int k = 0; k <= k_max; ++k) {
        Rational residual = (expected_correct(n, k, limits) - target) / target;
        if (residual < 0) residual = -residual;
        if (residual < threshold) return k;
    }
    throw budget_error("shuffles_needed: threshold not reached within k_max = " +
                       std::to_string(k_max));
}

nlohmann::ordered_json to_json(const NextCardPmf& pmf) {
    nlohmann::ordered_json j;
    j["n"] = pmf.n;
    j["k"] = pmf.k;
    j["revealed"] = pmf.revealed;
    j["denominator_weight"] = to_string(pmf.denominator_weight);
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [card, w] : pmf.weights) {
        nlohmann::ordered_json e;
        e["card"] = card;
        e["weight"] = to_string(w);
        e["prob"] = to_string(pmf.probs.at(card));
        entries.push_back(std::move(e));
    }
    return j;
}

}  // namespace riffle
