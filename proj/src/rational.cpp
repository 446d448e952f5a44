#include "bvfla/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bvfla {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(0) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos)
        throw std::invalid_argument("rational: empty string");
    std::string s = text.substr(b, e - b + 1);

    bool negative = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    std::string body = s.substr(i);
    if (body.empty()) throw std::invalid_argument("rational: '" + text + "'");

    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("rational: cannot parse '" + text + "'");
    };

    mpz_class num, den;
    if (size_t slash = body.find('/'); slash != std::string::npos) {
        std::string ns = body.substr(0, slash);
        std::string ds = body.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) throw bad();
        num = mpz_class(ns, 10);
        den = mpz_class(ds, 10);
        if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    } else if (size_t dot = body.find('.'); dot != std::string::npos) {
        std::string is = body.substr(0, dot);
        std::string fs = body.substr(dot + 1);
        if (!all_digits(is) || !all_digits(fs)) throw bad();
        num = mpz_class(is, 10);
        for (char c : fs) {
            num *= 10;
            num += c - '0';
        }
        den = 1;
        for (size_t k = 0; k < fs.size(); ++k) den *= 10;
    } else {
        if (!all_digits(body)) throw bad();
        num = mpz_class(body, 10);
        den = 1;
    }
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bvfla
