#include "riffle/qpoly.hpp"

#include <sstream>

#include "riffle/numbers.hpp"

namespace riffle {

QPoly QPoly::monomial(long power, Int coeff) {
    if (coeff == 0) return QPoly();
    std::vector<Int> c(power + 1, Int(0));
    c[power] = std::move(coeff);
    return QPoly(std::move(c));
}

const Int& QPoly::coeff(long i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[i];
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.c_.empty() || rhs.c_.empty()) return QPoly();
    std::vector<Int> out(lhs.c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return QPoly(std::move(out));
}

QPoly QPoly::shifted(long power) const {
    if (c_.empty()) return QPoly();
    std::vector<Int> out(c_.size() + power, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + power] = c_[i];
    return QPoly(std::move(out));
}

Int QPoly::at_one() const {
    Int s = 0;
    for (const Int& a : c_) s += a;
    return s;
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int qpoly_deriv_at1(const QPoly& p, long r) {
    Int s = 0;
    for (long i = r; i <= p.degree(); ++i) s += p.coeff(i) * falling(i, r);
    return s;
}

}  // namespace riffle
