#include "bvfla/ideals.hpp"

namespace bvfla {

std::string_view ideal_class_name(IdealClass c) {
    switch (c) {
        case IdealClass::subsemigroup: return "subsemigroup";
        case IdealClass::left: return "left";
        case IdealClass::right: return "right";
        case IdealClass::two_sided: return "two_sided";
        case IdealClass::generalized_bi: return "generalized_bi";
        case IdealClass::bi: return "bi";
        case IdealClass::interior: return "interior";
    }
    return "?";
}

std::optional<IdealClass> ideal_class_from_name(std::string_view name) {
    for (IdealClass c : kAllIdealClasses)
        if (ideal_class_name(c) == name) return c;
    return std::nullopt;
}

namespace {

void require_match(const Magma& m, const BvfSubset& b) {
    if (b.order() != m.order())
        throw std::invalid_argument("subset order does not match the magma");
}

Verdict fail(std::vector<int> elems, int product, const Rational& ph, const Rational& pn,
             const Rational& nh, const Rational& nn) {
    Verdict v;
    v.holds = false;
    v.witness = DegreeWitness{std::move(elems), product, ph, pn, nh, nn};
    return v;
}

// Scans pairs (x,y) row-major; pos bound/neg bound are computed per pair.
template <typename PosNeed, typename NegNeed>
Verdict scan_pairs(const Magma& m, const BvfSubset& b, PosNeed&& pneed, NegNeed&& nneed) {
    const int n = m.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int p = m.at(x, y);
            const Rational& pn = pneed(x, y);
            const Rational& nn = nneed(x, y);
            if (b.pos(p) < pn || nn < b.neg(p))
                return fail({x, y}, p, b.pos(p), pn, b.neg(p), nn);
        }
    return {};
}

// Scans triples (x,y,z) row-major over the product (x.y).z.
template <typename PosNeed, typename NegNeed>
Verdict scan_triples(const Magma& m, const BvfSubset& b, PosNeed&& pneed, NegNeed&& nneed) {
    const int n = m.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int p = m.at(m.at(x, y), z);
                const Rational& pn = pneed(x, y, z);
                const Rational& nn = nneed(x, y, z);
                if (b.pos(p) < pn || nn < b.neg(p))
                    return fail({x, y, z}, p, b.pos(p), pn, b.neg(p), nn);
            }
    return {};
}

}  // namespace

Verdict is_bvf_subsemigroup(const Magma& m, const BvfSubset& b) {
    require_match(m, b);
    return scan_pairs(
        m, b, [&](int x, int y) -> const Rational& { return min(b.pos(x), b.pos(y)); },
        [&](int x, int y) -> const Rational& { return max(b.neg(x), b.neg(y)); });
}

Verdict is_bvf_left_ideal(const Magma& m, const BvfSubset& b) {
    require_match(m, b);
    return scan_pairs(
        m, b, [&](int, int y) -> const Rational& { return b.pos(y); },
        [&](int, int y) -> const Rational& { return b.neg(y); });
}

Verdict is_bvf_right_ideal(const Magma& m, const BvfSubset& b) {
    require_match(m, b);
    return scan_pairs(
        m, b, [&](int x, int) -> const Rational& { return b.pos(x); },
        [&](int x, int) -> const Rational& { return b.neg(x); });
}

Verdict is_bvf_ideal(const Magma& m, const BvfSubset& b) {
    Verdict l = is_bvf_left_ideal(m, b);
    if (!l.holds) return l;
    return is_bvf_right_ideal(m, b);
}

Verdict is_bvf_generalized_bi_ideal(const Magma& m, const BvfSubset& b, BiBound bound) {
    require_match(m, b);
    if (bound == BiBound::outer_pair)
        return scan_triples(
            m, b, [&](int x, int, int z) -> const Rational& { return min(b.pos(x), b.pos(z)); },
            [&](int x, int, int z) -> const Rational& { return max(b.neg(x), b.neg(z)); });
    return scan_triples(
        m, b, [&](int x, int y, int) -> const Rational& { return min(b.pos(x), b.pos(y)); },
        [&](int x, int y, int) -> const Rational& { return max(b.neg(x), b.neg(y)); });
}

Verdict is_bvf_bi_ideal(const Magma& m, const BvfSubset& b, BiBound bound) {
    Verdict s = is_bvf_subsemigroup(m, b);
    if (!s.holds) return s;
    return is_bvf_generalized_bi_ideal(m, b, bound);
}

Verdict is_bvf_interior_ideal(const Magma& m, const BvfSubset& b) {
    require_match(m, b);
    return scan_triples(
        m, b, [&](int, int y, int) -> const Rational& { return b.pos(y); },
        [&](int, int y, int) -> const Rational& { return b.neg(y); });
}

const Verdict& Classification::get(IdealClass c) const {
    switch (c) {
        case IdealClass::subsemigroup: return subsemigroup;
        case IdealClass::left: return left;
        case IdealClass::right: return right;
        case IdealClass::two_sided: return two_sided;
        case IdealClass::generalized_bi: return generalized_bi;
        case IdealClass::bi: return bi;
        case IdealClass::interior: return interior;
    }
    return subsemigroup;
}

Classification classify(const Magma& m, const BvfSubset& b, BiBound bound) {
    Classification c;
    c.subsemigroup = is_bvf_subsemigroup(m, b);
    c.left = is_bvf_left_ideal(m, b);
    c.right = is_bvf_right_ideal(m, b);
    c.two_sided = c.left.holds ? c.right : c.left;
    c.generalized_bi = is_bvf_generalized_bi_ideal(m, b, bound);
    c.bi = c.subsemigroup.holds ? c.generalized_bi : c.subsemigroup;
    c.interior = is_bvf_interior_ideal(m, b);
    return c;
}

namespace {

// Containment check c <= b with a per-element witness: have is b's degree,
// need is the composed degree it must dominate.
Verdict contained_in(const BvfSubset& c, const BvfSubset& b) {
    for (int x = 0; x < b.order(); ++x) {
        if (b.pos(x) < c.pos(x) || c.neg(x) < b.neg(x))
            return fail({x}, x, b.pos(x), c.pos(x), b.neg(x), c.neg(x));
    }
    return {};
}

}  // namespace

Verdict characterize_by_composition(const Magma& m, const BvfSubset& b, IdealClass c) {
    require_match(m, b);
    BvfSubset g = BvfSubset::gamma(m.order());
    switch (c) {
        case IdealClass::subsemigroup: return contained_in(compose(m, b, b), b);
        case IdealClass::left: return contained_in(compose(m, g, b), b);
        case IdealClass::right: return contained_in(compose(m, b, g), b);
        case IdealClass::two_sided: {
            Verdict l = contained_in(compose(m, g, b), b);
            if (!l.holds) return l;
            return contained_in(compose(m, b, g), b);
        }
        case IdealClass::generalized_bi:
            return contained_in(compose(m, compose(m, b, g), b), b);
        case IdealClass::bi: {
            Verdict s = contained_in(compose(m, b, b), b);
            if (!s.holds) return s;
            return contained_in(compose(m, compose(m, b, g), b), b);
        }
        case IdealClass::interior:
            return contained_in(compose(m, compose(m, g, b), g), b);
    }
    throw std::invalid_argument("unknown ideal class");
}

nlohmann::json verdict_to_json(const Verdict& v, const Magma& m) {
    nlohmann::json j;
    j["holds"] = v.holds;
    if (!v.witness) {
        j["witness"] = nullptr;
        return j;
    }
    const DegreeWitness& w = *v.witness;
    nlohmann::json jw;
    jw["elements"] = w.elements;
    nlohmann::json names = nlohmann::json::array();
    for (int e : w.elements) names.push_back(m.name(e));
    jw["element_names"] = names;
    jw["product"] = w.product;
    jw["product_name"] = m.name(w.product);
    jw["pos_have"] = w.pos_have.str();
    jw["pos_need"] = w.pos_need.str();
    jw["neg_have"] = w.neg_have.str();
    jw["neg_need"] = w.neg_need.str();
    j["witness"] = jw;
    return j;
}

nlohmann::json classification_to_json(const Classification& c, const Magma& m) {
    nlohmann::json j;
    for (IdealClass cls : kAllIdealClasses)
        j[std::string(ideal_class_name(cls))] = verdict_to_json(c.get(cls), m);
    return j;
}

}  // namespace bvfla
