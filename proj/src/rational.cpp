#include "riffle/rational.hpp"

#include <stdexcept>

namespace riffle {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool percent = false;
    while (!s.empty() && s.back() == ' ') s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && s[start] == ' ') ++start;
    s = s.substr(start);
    if (!s.empty() && s.back() == '%') {
        percent = true;
        s.pop_back();
    }
    if (s.empty()) throw std::invalid_argument("parse_rational: empty value");

    Rational r;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // exact decimal: a.b -> (a*10^k + b) / 10^k
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long frac_len = static_cast<long>(s.size() - dot - 1);
        Int num(digits, 10);
        Int den = 1;
        for (long i = 0; i < frac_len; ++i) den *= 10;
        r = make_rational(num, den);
    } else {
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
        if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
            throw std::invalid_argument("parse_rational: zero denominator");
        r.canonicalize();
    }
    if (percent) r /= 100;
    return r;
}

}  // namespace riffle
