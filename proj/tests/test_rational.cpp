#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvfla/rational.hpp"

#include <sstream>

using bvfla::Rational;

TEST_CASE("fraction parsing canonicalizes") {
    CHECK(Rational::parse("1/2").str() == "1/2");
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK(Rational::parse("3").str() == "3");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("  1/2 ").str() == "1/2");
    CHECK(Rational::parse("+3/9").str() == "1/3");
}

TEST_CASE("decimal parsing is exact") {
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.2") == Rational(-1, 5));
    CHECK(Rational::parse("2.50") == Rational(5, 2));
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    // a truncated decimal expansion is NOT one third
    CHECK(Rational::parse("0.3333333333333333") != Rational(1, 3));
}

TEST_CASE("malformed input is rejected") {
    for (const char* bad :
         {"", "1/0", "a", "1.2.3", "/3", "1/", "--2", "1 / 2", "1e3", ".", ".5", "1.", "1/-2"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("two-argument constructor reduces") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 10) < Rational(3, 10));
    CHECK(Rational(-1, 5) > Rational(-2, 5));
    CHECK(Rational(1, 3) > Rational(0));
    CHECK(Rational(1, 3) == Rational(2, 6));
    CHECK(Rational(999999999, 1000000000) < Rational(1));
    CHECK(Rational(1, 3) <= Rational(1, 3));
}

TEST_CASE("min and max pick by value") {
    Rational a(1, 10), b(3, 10);
    CHECK(min(a, b) == a);
    CHECK(max(a, b) == b);
    Rational c(-1, 5), d(-2, 5);
    CHECK(min(c, d) == d);
    CHECK(max(c, d) == c);
    CHECK(min(a, a) == a);
}

TEST_CASE("sign and zero") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 7).sign() == 1);
    CHECK(Rational(-1, 7).sign() == -1);
    CHECK_FALSE(Rational(1, 7).is_zero());
}

TEST_CASE("approximation is display-only on representable values") {
    CHECK(Rational(1, 4).approx() == 0.25);
    CHECK(Rational(-1, 2).approx() == -0.5);
    CHECK(Rational(3).approx() == 3.0);
}

TEST_CASE("streaming uses the canonical form") {
    std::ostringstream os;
    os << Rational(-7, 10);
    CHECK(os.str() == "-7/10");
}

TEST_CASE("str round-trips through parse") {
    for (long n = -12; n <= 12; ++n)
        for (long d = 1; d <= 9; ++d) {
            Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
}
