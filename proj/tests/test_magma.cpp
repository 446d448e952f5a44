#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvfla/magma.hpp"

#include <sstream>

using namespace bvfla;

namespace {

// The two worked four-element tables used throughout the suites.
const std::string kTable31 = "4\n# a b c d\nb d c a\na b c d\nc c c c\nd a c b\n";
const std::string kTable32 = "4\n# a b c d\nc c c d\nd d c c\nd d d d\nd d d d\n";

Magma m31() { return Magma::parse(kTable31); }
Magma m32() { return Magma::parse(kTable32); }

}  // namespace

TEST_CASE("parsing a named table") {
    Magma m = m31();
    CHECK(m.order() == 4);
    CHECK(m.has_names());
    CHECK(m.name(0) == "a");
    CHECK(m.name(3) == "d");
    CHECK(m.at(0, 0) == 1);   // a.a = b
    CHECK(m.at(3, 1) == 0);   // d.b = a
    CHECK(m.at(2, 3) == 2);   // c.d = c
    CHECK(m.table() == std::vector<int>{1, 3, 2, 0, 0, 1, 2, 3, 2, 2, 2, 2, 3, 0, 2, 1});
}

TEST_CASE("parsing a numeric table without names") {
    Magma m = Magma::parse("2\n0 1\n1 0\n");
    CHECK_FALSE(m.has_names());
    CHECK(m.name(1) == "1");
    CHECK(m.at(1, 0) == 1);
}

TEST_CASE("blank lines and surrounding whitespace are tolerated") {
    Magma m = Magma::parse("\n  2\n\n 0 0 \n0 0\n\n");
    CHECK(m.order() == 2);
    CHECK(m.at(0, 0) == 0);
}

TEST_CASE("format round-trips") {
    CHECK(m31().format() == kTable31);
    CHECK(Magma::parse(m32().format()) == m32());
    Magma numeric = Magma::parse("2\n1 0\n0 1\n");
    CHECK(Magma::parse(numeric.format()) == numeric);
}

TEST_CASE("parse rejects malformed tables") {
    CHECK_THROWS_AS(Magma::parse(""), ParseError);
    CHECK_THROWS_AS(Magma::parse("x\n"), ParseError);
    CHECK_THROWS_AS(Magma::parse("0\n"), ParseError);
    CHECK_THROWS_AS(Magma::parse("2\n0 1\n"), ParseError);           // missing row
    CHECK_THROWS_AS(Magma::parse("2\n0 1 0\n1 0\n"), ParseError);    // long row
    CHECK_THROWS_AS(Magma::parse("2\n0 2\n1 0\n"), ParseError);      // out of range
    CHECK_THROWS_AS(Magma::parse("2\n0 q\n1 0\n"), ParseError);      // unknown symbol
    CHECK_THROWS_AS(Magma::parse("2\n0 1\n1 0\n0 1\n"), ParseError); // trailing row
    CHECK_THROWS_AS(Magma::parse("2\n# x\n0 1\n1 0\n"), ParseError); // short name list

    try {
        Magma::parse("2\n0 1\n1 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 3);
    }
}

TEST_CASE("law checks on the first worked example") {
    Magma m = m31();
    CHECK(check_law(m, Law::left_invertive).holds);
    CHECK(check_law(m, Law::medial).holds);
    CHECK(check_law(m, Law::paramedial).holds);

    LawReport assoc = check_law(m, Law::associative);
    CHECK_FALSE(assoc.holds);
    CHECK(assoc.witness == std::vector<int>{0, 0, 0});
    CHECK(assoc.lhs == 0);  // (a.a).a = a
    CHECK(assoc.rhs == 3);  // a.(a.a) = d

    LawReport comm = check_law(m, Law::commutative);
    CHECK_FALSE(comm.holds);
    CHECK(comm.witness == std::vector<int>{0, 1});
    CHECK(comm.lhs == 3);
    CHECK(comm.rhs == 0);
}

TEST_CASE("the published non-associativity instances really fail") {
    // d.(b.a) = d while (d.b).a = b in the first table
    Magma a = m31();
    CHECK(a.at(3, a.at(1, 0)) == 3);
    CHECK(a.at(a.at(3, 1), 0) == 1);
    // a.(a.b) = c while (a.a).b = d in the second
    Magma b = m32();
    CHECK(b.at(0, b.at(0, 1)) == 2);
    CHECK(b.at(b.at(0, 0), 1) == 3);
}

TEST_CASE("law checks on the second worked example") {
    Magma m = m32();
    CHECK(check_law(m, Law::left_invertive).holds);
    CHECK(check_law(m, Law::medial).holds);
    LawReport assoc = check_law(m, Law::associative);
    CHECK_FALSE(assoc.holds);
    CHECK(assoc.witness == std::vector<int>{0, 0, 0});
    CHECK(assoc.lhs == 3);
    CHECK(assoc.rhs == 2);
}

TEST_CASE("left identity detection") {
    CHECK(find_left_identity(m31()) == 1);  // b.x = x for all x
    CHECK_FALSE(find_left_identity(m32()).has_value());
    // least one is reported when several exist
    Magma right_zero = Magma::parse("2\n0 1\n0 1\n");
    CHECK(find_left_identity(right_zero) == 0);
}

TEST_CASE("the derived identity a(bc) = b(ac) under a left identity") {
    CHECK(check_lemma_l1(m31()).holds);
    CHECK_THROWS_AS(check_lemma_l1(m32()), std::invalid_argument);       // no left identity
    Magma not_li = Magma::parse("2\n0 1\n0 0\n");
    CHECK_THROWS_AS(check_lemma_l1(not_li), std::invalid_argument);      // not left invertive
}

TEST_CASE("left invertive failure carries a sound witness") {
    Magma m = Magma::parse("2\n0 1\n0 0\n");
    LawReport r = check_law(m, Law::left_invertive);
    CHECK_FALSE(r.holds);
    CHECK(r.witness == std::vector<int>{0, 0, 1});
    const auto& w = r.witness;
    CHECK(m.at(m.at(w[0], w[1]), w[2]) == r.lhs);
    CHECK(m.at(m.at(w[2], w[1]), w[0]) == r.rhs);
    CHECK(r.lhs != r.rhs);
}

TEST_CASE("every order-2 left invertive table is medial") {
    // exhaustive: the medial law is a consequence of the left invertive one
    for (int bits = 0; bits < 16; ++bits) {
        std::vector<int> cells(4);
        for (int i = 0; i < 4; ++i) cells[i] = (bits >> i) & 1;
        Magma m(2, cells);
        if (check_law(m, Law::left_invertive).holds) CHECK(check_law(m, Law::medial).holds);
    }
}

TEST_CASE("law names round-trip") {
    for (Law law : {Law::left_invertive, Law::medial, Law::paramedial, Law::associative,
                    Law::commutative, Law::lemma_l1})
        CHECK(law_from_name(law_name(law)) == law);
    CHECK(law_arity(Law::commutative) == 2);
    CHECK(law_arity(Law::left_invertive) == 3);
    CHECK(law_arity(Law::associative) == 3);
    CHECK(law_arity(Law::lemma_l1) == 3);
    CHECK(law_arity(Law::medial) == 4);
    CHECK(law_arity(Law::paramedial) == 4);
    CHECK_FALSE(law_from_name("nonsense").has_value());
}

TEST_CASE("crisp classification of singleton subsets") {
    CrispClassification c1 = classify_crisp(m31(), {2});
    CHECK(c1.left_ideal.holds);
    CHECK(c1.right_ideal.holds);
    CHECK(c1.two_sided.holds);
    CHECK(c1.subsemigroup.holds);
    CHECK(c1.interior.holds);
    CHECK(c1.bi.holds);

    CrispClassification c2 = classify_crisp(m32(), {2});
    CHECK_FALSE(c2.right_ideal.holds);
    CHECK(c2.right_ideal.witness == std::vector<int>{2, 0});  // c.a = d escapes {c}
    CHECK(c2.right_ideal.product == 3);
    CHECK_FALSE(c2.left_ideal.holds);
    CHECK(c2.left_ideal.witness == std::vector<int>{2, 2});   // c.c = d escapes {c}
    CHECK_FALSE(c2.subsemigroup.holds);
}

TEST_CASE("crisp classification input validation") {
    CHECK_THROWS_AS(classify_crisp(m31(), {}), std::invalid_argument);
    CHECK_THROWS_AS(classify_crisp(m31(), {4}), std::invalid_argument);
    CHECK_THROWS_AS(classify_crisp(m31(), {-1}), std::invalid_argument);
}

TEST_CASE("the subtraction groupoid on an integer window") {
    IntLawReport li = sampled_law_check(-5, 5, Law::left_invertive);
    CHECK(li.holds);
    IntLawReport med = sampled_law_check(-5, 5, Law::medial);
    CHECK(med.holds);

    IntLawReport comm = sampled_law_check(-5, 5, Law::commutative);
    CHECK_FALSE(comm.holds);
    CHECK(comm.witness == std::vector<long long>{-5, -4});
    CHECK(comm.lhs == 1);
    CHECK(comm.rhs == -1);

    IntLawReport assoc = sampled_law_check(-5, 5, Law::associative);
    CHECK_FALSE(assoc.holds);
    CHECK(assoc.witness == std::vector<long long>{-5, -5, -5});
    CHECK(assoc.lhs == -5);  // ((-5)-(-5)) -> 0, then -5-0 = -5
    CHECK(assoc.rhs == 5);   // -5 - (0) on the other side gives 5
}

TEST_CASE("hashes are stable identifiers") {
    CHECK(m31().hash() == "322b3c8ca6ae0963");
    CHECK(m32().hash() == "fdc0cdc53864088a");
    CHECK(m31().hash() != m32().hash());
}

TEST_CASE("equality ignores nothing") {
    CHECK(m31() == m31());
    CHECK_FALSE(m31() == m32());
    // names participate: same cells, different labels
    Magma named = Magma::parse("2\n# x y\nx y\ny x\n");
    Magma bare = Magma::parse("2\n0 1\n1 0\n");
    CHECK_FALSE(named == bare);
    CHECK(named.table() == bare.table());
}
