#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "riffle/permutation.hpp"
#include "riffle/rational.hpp"

#include "json.hpp"

namespace riffle {

// Enumeration limits. Exceeding one raises budget_error, never a silent
// truncation. Both can be overridden per call or through the
// RIFFLE_ENUM_BUDGET environment variable (read once at startup).
struct EnumLimits {
    int one_shuffle_max_n = 20;   // 2^n outcomes
    int k_shuffle_max_n = 10;     // n! permutations

    static EnumLimits defaults();
};

// All decks reachable by k riffle shuffles of 1..n, with multiplicities.
// total is always 2^{kn}; entries are sorted lexicographically (std::map).
struct DeckDistribution {
    int n = 0;
    int k = 0;
    std::map<Permutation, Int> entries;
    Int total;
};

// Every cut/interleave outcome of a single shuffle: the identity gets
// multiplicity n+1, each two-rising-sequence deck multiplicity 1.
DeckDistribution enumerate_one_shuffle(int n, const EnumLimits& limits = EnumLimits::defaults());

// Multiplicity of deck p among the 2^{kn} outcomes of k shuffles:
// C(n + 2^k - m, n) with m = rising_sequences(p), zero when m > 2^k.
Int multiplicity(const Permutation& p, int k);

// Walks S_n and scores each permutation with its k-shuffle multiplicity,
// dropping unreachable decks.
DeckDistribution enumerate_k_shuffles(int n, int k, const EnumLimits& limits = EnumLimits::defaults());

// (2^{kn}, sum_m A(n,m-1) C(n + 2^k - m, n)) -- the two sides of the
// x = 2^k case of Worpitzky's identity.
std::pair<Int, Int> worpitzky_total(int n, int k);

// One GSR sample: cut at t ~ Binomial(n, 1/2), then interleave by the
// proportional drop rule; repeated k times. Deterministic for a fixed seed.
Permutation sample_gsr(int n, int k, std::uint64_t seed);

nlohmann::ordered_json to_json(const DeckDistribution& d);

}  // namespace riffle
