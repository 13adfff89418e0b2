#include "riffle/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace riffle {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.cards.resize(n);
    std::iota(p.cards.begin(), p.cards.end(), 1);
    return p;
}

bool Permutation::is_valid() const {
    int n = size();
    if (n < 1) return false;
    std::vector<bool> seen(n + 1, false);
    for (int c : cards) {
        if (c < 1 || c > n || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    int n = size();
    Permutation inv;
    inv.cards.resize(n);
    for (int pos = 0; pos < n; ++pos) inv.cards[cards[pos] - 1] = pos + 1;
    return inv;
}

std::string to_string(const Permutation& p) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p.cards[i];
    }
    os << "]";
    return os.str();
}

int rising_sequences(const Permutation& p) {
    if (!p.is_valid()) throw std::invalid_argument("rising_sequences: not a permutation");
    Permutation inv = p.inverse();
    int descents = 0;
    for (int i = 0; i + 1 < inv.size(); ++i)
        if (inv.cards[i] > inv.cards[i + 1]) ++descents;
    return 1 + descents;
}

InverseRuns inverse_and_runs(const Permutation& p) {
    if (!p.is_valid()) throw std::invalid_argument("inverse_and_runs: not a permutation");
    InverseRuns out;
    out.inverse = p.inverse();
    const auto& v = out.inverse.cards;
    std::vector<int> run{v[0]};
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) {
            out.runs.push_back(std::move(run));
            run.clear();
        }
        run.push_back(v[i]);
    }
    out.runs.push_back(std::move(run));
    return out;
}

}  // namespace riffle
