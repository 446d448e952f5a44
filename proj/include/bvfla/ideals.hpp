#pragma once

#include "bvfla/bvf.hpp"

#include <array>
#include <optional>

namespace bvfla {

enum class IdealClass {
    subsemigroup,
    left,
    right,
    two_sided,
    generalized_bi,
    bi,
    interior,
};

inline constexpr std::array<IdealClass, 7> kAllIdealClasses = {
    IdealClass::subsemigroup, IdealClass::left,  IdealClass::right, IdealClass::two_sided,
    IdealClass::generalized_bi, IdealClass::bi, IdealClass::interior,
};

std::string_view ideal_class_name(IdealClass c);
std::optional<IdealClass> ideal_class_from_name(std::string_view name);

// Which pair of arguments bounds the product degree in the generalized-bi
// and bi checks: mu((x.y).z) against min(mu(x), mu(z)) (outer_pair, the
// default) or against min(mu(x), mu(y)) (left_pair).
enum class BiBound { outer_pair, left_pair };

struct DegreeWitness {
    std::vector<int> elements;  // failing tuple, row-major first
    int product = -1;           // the element whose degrees are compared
    Rational pos_have, pos_need;
    Rational neg_have, neg_need;

    bool pos_violated() const { return pos_have < pos_need; }
    bool neg_violated() const { return neg_need < neg_have; }
};

struct Verdict {
    bool holds = true;
    std::optional<DegreeWitness> witness;
};

Verdict is_bvf_subsemigroup(const Magma& m, const BvfSubset& b);
Verdict is_bvf_left_ideal(const Magma& m, const BvfSubset& b);
Verdict is_bvf_right_ideal(const Magma& m, const BvfSubset& b);
Verdict is_bvf_ideal(const Magma& m, const BvfSubset& b);  // two-sided
Verdict is_bvf_generalized_bi_ideal(const Magma& m, const BvfSubset& b,
                                    BiBound bound = BiBound::outer_pair);
Verdict is_bvf_bi_ideal(const Magma& m, const BvfSubset& b, BiBound bound = BiBound::outer_pair);
Verdict is_bvf_interior_ideal(const Magma& m, const BvfSubset& b);

struct Classification {
    Verdict subsemigroup, left, right, two_sided, generalized_bi, bi, interior;

    const Verdict& get(IdealClass c) const;
    bool holds(IdealClass c) const { return get(c).holds; }
};

Classification classify(const Magma& m, const BvfSubset& b, BiBound bound = BiBound::outer_pair);

// Composition-based route to the same verdicts (the two routes are
// independent implementations; tests require them to agree):
//   subsemigroup     B o B        contained in B
//   left             Gamma o B    contained in B
//   right            B o Gamma    contained in B
//   two_sided        both of the above
//   generalized_bi   (B o Gamma) o B contained in B
//   bi               subsemigroup and generalized_bi conditions
//   interior         (Gamma o B) o Gamma contained in B
// Containment is bipolar leq; a failing element is reported with degrees.
Verdict characterize_by_composition(const Magma& m, const BvfSubset& b, IdealClass c);

nlohmann::json verdict_to_json(const Verdict& v, const Magma& m);
nlohmann::json classification_to_json(const Classification& c, const Magma& m);

}  // namespace bvfla
