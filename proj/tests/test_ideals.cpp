#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvfla/enumerate.hpp"
#include "bvfla/ideals.hpp"

using namespace bvfla;

namespace {

Magma m31() {
    return Magma(4, {1, 3, 2, 0, 0, 1, 2, 3, 2, 2, 2, 2, 3, 0, 2, 1}, {"a", "b", "c", "d"});
}
Magma m32() {
    return Magma(4, {2, 2, 2, 3, 3, 3, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3}, {"a", "b", "c", "d"});
}
BvfSubset b31() {
    return BvfSubset({Rational(1, 5), Rational(1, 5), Rational(7, 10), Rational(1, 5)},
                     {Rational(-1, 2), Rational(-1, 2), Rational(-4, 5), Rational(-1, 2)});
}
BvfSubset b32() {
    return BvfSubset({Rational(1, 2), Rational(3, 10), Rational(1, 10), Rational(4, 5)},
                     {Rational(-7, 10), Rational(-2, 5), Rational(-1, 5), Rational(-9, 10)});
}

}  // namespace

TEST_CASE("first example subset is in every class") {
    Classification c = classify(m31(), b31());
    for (IdealClass cls : kAllIdealClasses) {
        CAPTURE(ideal_class_name(cls));
        CHECK(c.holds(cls));
        CHECK_FALSE(c.get(cls).witness.has_value());
    }
}

TEST_CASE("second example subset is interior but not much else") {
    Classification c = classify(m32(), b32());
    CHECK_FALSE(c.holds(IdealClass::subsemigroup));
    CHECK_FALSE(c.holds(IdealClass::left));
    CHECK_FALSE(c.holds(IdealClass::right));
    CHECK_FALSE(c.holds(IdealClass::two_sided));
    CHECK(c.holds(IdealClass::generalized_bi));
    CHECK_FALSE(c.holds(IdealClass::bi));
    CHECK(c.holds(IdealClass::interior));

    // first failing pair in row-major order is (a,a) with a.a = c
    for (IdealClass cls : {IdealClass::subsemigroup, IdealClass::left, IdealClass::right}) {
        const DegreeWitness& w = *c.get(cls).witness;
        CHECK(w.elements == std::vector<int>{0, 0});
        CHECK(w.product == 2);
        CHECK(w.pos_have == Rational(1, 10));
        CHECK(w.pos_violated());
        CHECK(w.neg_have == Rational(-1, 5));
        CHECK(w.neg_violated());
    }
    CHECK(c.get(IdealClass::left).witness->pos_need == Rational(1, 2));
    CHECK(c.get(IdealClass::left).witness->neg_need == Rational(-7, 10));
}

TEST_CASE("the published right-ideal violation at (b,c) is real") {
    Magma m = m32();
    BvfSubset b = b32();
    int product = m.at(1, 2);  // b.c
    CHECK(product == 2);       // = c
    CHECK(b.pos(product) == Rational(1, 10));
    CHECK(b.pos(1) == Rational(3, 10));
    CHECK(b.pos(product) < b.pos(1));           // 1/10 < 3/10
    CHECK(b.neg(product) == Rational(-1, 5));
    CHECK(b.neg(1) == Rational(-2, 5));
    CHECK(b.neg(product) > b.neg(1));           // -1/5 > -2/5
}

TEST_CASE("the whole carrier is in every class") {
    for (const Magma& m : {m31(), m32()}) {
        Classification c = classify(m, BvfSubset::gamma(m.order()));
        for (IdealClass cls : kAllIdealClasses) CHECK(c.holds(cls));
    }
}

TEST_CASE("two-sided and bi verdicts are conjunctions") {
    Classification c = classify(m32(), b32());
    // left fails, so two_sided reports the left witness
    CHECK(c.two_sided.witness->elements == c.left.witness->elements);
    // subsemigroup fails, so bi reports the subsemigroup witness
    CHECK(c.bi.witness->elements == c.subsemigroup.witness->elements);

    Verdict two = is_bvf_ideal(m32(), b32());
    CHECK(two.holds == (c.left.holds && c.right.holds));
}

TEST_CASE("interior failure carries a sound degree witness") {
    Magma m = m32();
    BvfSubset chi = BvfSubset::characteristic(4, {2});
    Verdict v = is_bvf_interior_ideal(m, chi);
    REQUIRE_FALSE(v.holds);
    const DegreeWitness& w = *v.witness;
    CHECK(w.elements == std::vector<int>{0, 2, 0});  // (a.c).a = d escapes
    CHECK(w.product == 3);
    CHECK(w.pos_have == Rational(0));
    CHECK(w.pos_need == Rational(1));
    CHECK(w.neg_have == Rational(0));
    CHECK(w.neg_need == Rational(-1));
    CHECK(m.at(m.at(w.elements[0], w.elements[1]), w.elements[2]) == w.product);
}

TEST_CASE("the two generalized-bi bounds are different predicates") {
    // on this table the outer-pair bound fails while the left-pair bound holds
    Magma m(4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0});
    BvfSubset chi = BvfSubset::characteristic(4, {0, 3});

    Verdict outer = is_bvf_generalized_bi_ideal(m, chi, BiBound::outer_pair);
    REQUIRE_FALSE(outer.holds);
    CHECK(outer.witness->elements == std::vector<int>{3, 2, 3});
    CHECK(outer.witness->product == 1);  // (d.c).d = c.d = b

    Verdict left = is_bvf_generalized_bi_ideal(m, chi, BiBound::left_pair);
    CHECK(left.holds);

    // the default everywhere is the outer pair
    CHECK(is_bvf_generalized_bi_ideal(m, chi).holds == outer.holds);
}

TEST_CASE("pointwise and compositional routes agree") {
    std::vector<Magma> magmas = {
        m31(),
        m32(),
        Magma(3, {0, 0, 0, 0, 0, 0, 0, 0, 1}),
        Magma(2, {0, 1, 1, 0}),
        Magma(2, {0, 1, 0, 0}),  // not left invertive; the equivalence is structural
    };
    for (const Magma& m : magmas) {
        std::vector<BvfSubset> subsets = {BvfSubset::gamma(m.order()),
                                          BvfSubset::characteristic(m.order(), {0})};
        if (m.order() == 4) {
            subsets.push_back(b31());
            subsets.push_back(b32());
        }
        for (int i = 0; i < 40; ++i)
            subsets.push_back(random_bvf(m.order(), 10, derive_seed(99, m.order(), i)));

        for (const BvfSubset& b : subsets)
            for (IdealClass cls : kAllIdealClasses) {
                CAPTURE(m.hash());
                CAPTURE(b.hash());
                CAPTURE(ideal_class_name(cls));
                bool pointwise = classify(m, b).holds(cls);
                Verdict composed = characterize_by_composition(m, b, cls);
                CHECK(pointwise == composed.holds);
                if (!composed.holds) {
                    // compositional witnesses point at a genuinely violated element
                    const DegreeWitness& w = *composed.witness;
                    CHECK(w.elements.size() == 1);
                    CHECK((w.pos_violated() || w.neg_violated()));
                }
            }
    }
}

TEST_CASE("class names round-trip") {
    for (IdealClass cls : kAllIdealClasses) {
        CHECK(ideal_class_from_name(ideal_class_name(cls)) == cls);
    }
    CHECK_FALSE(ideal_class_from_name("inner").has_value());
    CHECK(ideal_class_name(IdealClass::two_sided) == "two_sided");
    CHECK(ideal_class_name(IdealClass::generalized_bi) == "generalized_bi");
}

TEST_CASE("verdict json carries names, indices, and exact degrees") {
    Classification c = classify(m32(), b32());
    nlohmann::json j = verdict_to_json(c.get(IdealClass::right), m32());
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["elements"] == nlohmann::json({0, 0}));
    CHECK(j["witness"]["element_names"] == nlohmann::json({"a", "a"}));
    CHECK(j["witness"]["product"] == 2);
    CHECK(j["witness"]["product_name"] == "c");
    CHECK(j["witness"]["pos_have"] == "1/10");
    CHECK(j["witness"]["neg_need"] == "-7/10");

    nlohmann::json all = classification_to_json(c, m32());
    CHECK(all.size() == 7);
    CHECK(all["interior"]["holds"] == true);
    CHECK(all["interior"]["witness"].is_null());
}

TEST_CASE("classification rejects mismatched carriers") {
    CHECK_THROWS_AS(classify(m31(), BvfSubset::gamma(3)), std::invalid_argument);
}
