#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bvfla {

// Exact rational with arbitrary-precision numerator/denominator.
// Always kept in canonical form: reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den);

    // Accepts "p/q", an integer string, or a decimal string ("0.25" -> 1/4).
    // The conversion from decimals is exact. Throws std::invalid_argument on
    // malformed input or a zero denominator.
    static Rational parse(const std::string& text);

    // Canonical serialization: "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    // Display-only approximation; never used in comparisons.
    double approx() const { return v_.get_d(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bvfla
