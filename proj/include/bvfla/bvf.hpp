#pragma once

#include "bvfla/magma.hpp"
#include "bvfla/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bvfla {

// Bipolar-valued fuzzy subset of a carrier {0..n-1}: a positive membership
// degree in [0,1] and a negative one in [-1,0] per element.
class BvfSubset {
public:
    BvfSubset(std::vector<Rational> pos, std::vector<Rational> neg);

    static BvfSubset constant(int order, const Rational& pos, const Rational& neg);
    // pos identically 1, neg identically -1 (the whole carrier).
    static BvfSubset gamma(int order);
    // (1,-1) on the subset, (0,0) off it; the subset must be nonempty.
    static BvfSubset characteristic(int order, const std::vector<int>& subset);

    int order() const { return static_cast<int>(pos_.size()); }
    const Rational& pos(int i) const { return pos_[i]; }
    const Rational& neg(int i) const { return neg_[i]; }
    void set(int i, Rational pos, Rational neg);
    void set_pos(int i, Rational v);
    void set_neg(int i, Rational v);

    nlohmann::json to_json() const;
    static BvfSubset from_json(const nlohmann::json& j);
    static BvfSubset load_file(const std::string& path);
    std::string hash() const;

    friend bool operator==(const BvfSubset&, const BvfSubset&) = default;

private:
    std::vector<Rational> pos_;
    std::vector<Rational> neg_;
};

// Sup-min composition on the positive side, inf-max on the negative side,
// over all factorizations x = y.z in m. An element with no factorization
// gets degree 0 in both components.
BvfSubset compose(const Magma& m, const BvfSubset& b1, const BvfSubset& b2);

// Pointwise min on positive degrees, max on negative ones.
BvfSubset meet(const BvfSubset& b1, const BvfSubset& b2);
// Pointwise max on positive degrees, min on negative ones.
BvfSubset join(const BvfSubset& b1, const BvfSubset& b2);

// Bipolar containment: pos pointwise <= and neg pointwise >=.
bool leq(const BvfSubset& b1, const BvfSubset& b2);

}  // namespace bvfla
