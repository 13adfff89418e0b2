#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "riffle/permutation.hpp"
#include "riffle/shuffle.hpp"

#include "json.hpp"

namespace riffle {

// What the player knows during one-shuffle play: either the revealed cards
// are still the single block 1..next_expected-1 (the cut position is not yet
// known), or the remaining deck has resolved into two increasing ranges that
// are consumed from their low ends.
struct GuessState {
    int n = 0;
    std::vector<int> revealed;
    bool split_known = false;
    int next_expected = 1;           // only before the split is known
    int low_lo = 0, low_hi = -1;     // lower range, empty when lo > hi
    int high_lo = 0, high_hi = -1;   // upper range
};

// Exact conditional distribution of the next card.
struct NextCardPmf {
    int n = 0;
    int k = 0;
    std::vector<int> revealed;
    std::map<int, Rational> probs;    // card -> reduced conditional probability
    std::map<int, Int> weights;       // card -> conditional multiplicity
    Int denominator_weight;           // total conditional multiplicity

    // Most probable next card, ties broken toward the lowest card.
    int argmax_card() const;
};

// Plays the one-shuffle strategy (guess 1 first, then the head of the longer
// inferred range, lower card on ties) against a known deck and counts hits.
// The deck must be reachable by a single shuffle (at most 2 rising sequences).
int correct_guesses_one_shuffle(const Permutation& deck);

// P(first card = 1) = 1/2 + 1/2^n, P(first card = m) = C(n-1,m-1)/2^n.
NextCardPmf first_card_pmf(int n);

// Probability a/(a+b) that the next card heads the length-a range.
Rational next_from_split(long a, long b);

// Exact Bayes posterior for the next card after k shuffles, obtained by
// conditioning the full k-shuffle distribution on the revealed prefix.
NextCardPmf bayes_next_pmf(int n, int k, const std::vector<int>& revealed,
                           const EnumLimits& limits = EnumLimits::defaults());

struct Counterexample {
    int n = 0;
    std::vector<int> revealed;
    int greedy_card = 0;   // head of the longer inferred subsequence
    int bayes_card = 0;    // true posterior argmax
};

// Scans n = 2..n_max and all single-card prefixes for a state where the
// longer-subsequence guess disagrees with the Bayes argmax.
std::optional<Counterexample> find_min_counterexample(int k, int n_max,
                                                      const EnumLimits& limits = EnumLimits::defaults());

// Exact expected number of correct guesses under per-step Bayes-greedy play
// after k shuffles of an n-card deck.
Rational expected_correct(int n, int k, const EnumLimits& limits = EnumLimits::defaults());

// H_n, the expectation against a uniformly random deck.
Rational harmonic_expectation(long n);

// Smallest k whose expectation is within the relative threshold of H_n.
int shuffles_needed(int n, const Rational& threshold, int k_max = 64,
                    const EnumLimits& limits = EnumLimits::defaults());

nlohmann::ordered_json to_json(const NextCardPmf& pmf);

// Conditional prefix weights without enumeration.
//
// The total k-shuffle multiplicity of all decks extending a revealed prefix
// depends on the prefix only through (a) the set of revealed cards and (b)
// how many inverse-permutation descents the prefix has already forced. The
// unseen cards split into maximal chains of consecutive values; any
// arrangement of them adds one forced descent per within-chain inversion of
// a consecutive pair, and those are counted by a product of Eulerian
// polynomials. That reduces each weight to a single sum over descent counts.
class PrefixWeights {
public:
    PrefixWeights(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const Int& total() const { return total_; }   // 2^{kn}

    // Revealed-card sets are bitmasks: bit c-1 set means card c was revealed.
    static constexpr int max_n = 25;

    // Extra forced descents caused by revealing card c after the given set.
    static int forced_descent_delta(std::uint32_t revealed_mask, int c);

    // Total multiplicity of decks whose first |mask| cards are the revealed
    // set in some order with `forced` forced descents.
    const Int& weight(std::uint32_t revealed_mask, int forced);

    // Bayes argmax next card (ties toward the lowest card); weight of that
    // choice is returned through best_weight when non-null.
    int best_next(std::uint32_t revealed_mask, int forced, Int* best_weight = nullptr);

private:
    const std::vector<Int>& chain_descent_poly(std::uint32_t revealed_mask);

    int n_;
    int k_;
    Int piles_;   // 2^k
    Int total_;   // 2^{kn}
    std::vector<std::vector<Int>> eulerian_rows_;            // A(L, .) for L <= n
    std::map<std::uint32_t, std::vector<Int>> poly_cache_;   // mask -> multinom * prod Eulerian
    std::map<std::pair<std::uint32_t, int>, Int> weight_cache_;
};

}  // namespace riffle
