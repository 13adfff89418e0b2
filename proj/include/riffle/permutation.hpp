#pragma once

#include <compare>
#include <string>
#include <vector>

namespace riffle {

// An ordering of cards 1..n, top of the deck first.
struct Permutation {
    std::vector<int> cards;

    Permutation() = default;
    explicit Permutation(std::vector<int> c) : cards(std::move(c)) {}

    static Permutation identity(int n);

    int size() const { return static_cast<int>(cards.size()); }
    bool is_valid() const;                 // bijection on {1..n}, n >= 1
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;
};

std::string to_string(const Permutation& p);

// Number of rising sequences: maximal runs of consecutive card values
// appearing in increasing deck positions. Equals 1 + descents(inverse).
int rising_sequences(const Permutation& p);

struct InverseRuns {
    Permutation inverse;
    std::vector<std::vector<int>> runs;    // maximal ascending runs of the inverse
};

// The inverse permutation together with its maximal ascending runs;
// the number of runs equals rising_sequences(p).
InverseRuns inverse_and_runs(const Permutation& p);

}  // namespace riffle
