#include "bvfla/bvf.hpp"

#include <cstdio>
#include <fstream>

namespace bvfla {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kMinusOne(-1);

void check_ranges(const std::vector<Rational>& pos, const std::vector<Rational>& neg) {
    if (pos.size() != neg.size())
        throw std::invalid_argument("bvf subset: positive/negative arrays differ in length");
    if (pos.empty()) throw std::invalid_argument("bvf subset: empty carrier");
    for (const auto& p : pos)
        if (p < kZero || p > kOne)
            throw std::invalid_argument("bvf subset: positive degree " + p.str() +
                                        " outside [0,1]");
    for (const auto& n : neg)
        if (n < kMinusOne || n > kZero)
            throw std::invalid_argument("bvf subset: negative degree " + n.str() +
                                        " outside [-1,0]");
}

std::uint64_t fnv1a_str(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

BvfSubset::BvfSubset(std::vector<Rational> pos, std::vector<Rational> neg)
    : pos_(std::move(pos)), neg_(std::move(neg)) {
    check_ranges(pos_, neg_);
}

BvfSubset BvfSubset::constant(int order, const Rational& pos, const Rational& neg) {
    if (order < 1) throw std::invalid_argument("bvf subset: order must be at least 1");
    return BvfSubset(std::vector<Rational>(order, pos), std::vector<Rational>(order, neg));
}

BvfSubset BvfSubset::gamma(int order) { return constant(order, kOne, kMinusOne); }

BvfSubset BvfSubset::characteristic(int order, const std::vector<int>& subset) {
    if (order < 1) throw std::invalid_argument("bvf subset: order must be at least 1");
    if (subset.empty())
        throw std::invalid_argument("characteristic function requires a nonempty subset");
    std::vector<Rational> pos(order, kZero), neg(order, kZero);
    for (int a : subset) {
        if (a < 0 || a >= order) throw std::invalid_argument("subset element out of range");
        pos[a] = kOne;
        neg[a] = kMinusOne;
    }
    return BvfSubset(std::move(pos), std::move(neg));
}

void BvfSubset::set(int i, Rational pos, Rational neg) {
    set_pos(i, std::move(pos));
    set_neg(i, std::move(neg));
}

void BvfSubset::set_pos(int i, Rational v) {
    if (v < kZero || v > kOne)
        throw std::invalid_argument("bvf subset: positive degree outside [0,1]");
    pos_[i] = std::move(v);
}

void BvfSubset::set_neg(int i, Rational v) {
    if (v < kMinusOne || v > kZero)
        throw std::invalid_argument("bvf subset: negative degree outside [-1,0]");
    neg_[i] = std::move(v);
}

nlohmann::json BvfSubset::to_json() const {
    nlohmann::json jp = nlohmann::json::array(), jn = nlohmann::json::array();
    for (const auto& p : pos_) jp.push_back(p.str());
    for (const auto& n : neg_) jn.push_back(n.str());
    return nlohmann::json{{"pos", jp}, {"neg", jn}};
}

namespace {

Rational degree_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number())
        throw std::invalid_argument(
            "bvf subset: non-integral JSON numbers lose exactness; write the degree as a "
            "string such as \"1/5\" or \"0.2\"");
    throw std::invalid_argument("bvf subset: degree must be a string or integer");
}

}  // namespace

BvfSubset BvfSubset::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pos") || !j.contains("neg"))
        throw std::invalid_argument("bvf subset: expected an object with 'pos' and 'neg' arrays");
    const auto& jp = j.at("pos");
    const auto& jn = j.at("neg");
    if (!jp.is_array() || !jn.is_array())
        throw std::invalid_argument("bvf subset: 'pos' and 'neg' must be arrays");
    std::vector<Rational> pos, neg;
    for (const auto& v : jp) pos.push_back(degree_from_json(v));
    for (const auto& v : jn) neg.push_back(degree_from_json(v));
    return BvfSubset(std::move(pos), std::move(neg));
}

BvfSubset BvfSubset::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bvf file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

std::string BvfSubset::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < order(); ++i) {
        h = fnv1a_str(h, pos_[i].str());
        h = fnv1a_str(h, neg_[i].str());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

BvfSubset compose(const Magma& m, const BvfSubset& b1, const BvfSubset& b2) {
    const int n = m.order();
    if (b1.order() != n || b2.order() != n)
        throw std::invalid_argument("compose: subset order does not match the magma");
    std::vector<Rational> pos(n, Rational(0)), neg(n, Rational(0));
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            int x = m.at(y, z);
            const Rational& p = min(b1.pos(y), b2.pos(z));
            const Rational& q = max(b1.neg(y), b2.neg(z));
            if (!seen[x]) {
                seen[x] = 1;
                pos[x] = p;
                neg[x] = q;
            } else {
                if (pos[x] < p) pos[x] = p;
                if (q < neg[x]) neg[x] = q;
            }
        }
    return BvfSubset(std::move(pos), std::move(neg));
}

BvfSubset meet(const BvfSubset& b1, const BvfSubset& b2) {
    if (b1.order() != b2.order())
        throw std::invalid_argument("meet: subsets have different carriers");
    std::vector<Rational> pos, neg;
    pos.reserve(b1.order());
    neg.reserve(b1.order());
    for (int i = 0; i < b1.order(); ++i) {
        pos.push_back(min(b1.pos(i), b2.pos(i)));
        neg.push_back(max(b1.neg(i), b2.neg(i)));
    }
    return BvfSubset(std::move(pos), std::move(neg));
}

BvfSubset join(const BvfSubset& b1, const BvfSubset& b2) {
    if (b1.order() != b2.order())
        throw std::invalid_argument("join: subsets have different carriers");
    std::vector<Rational> pos, neg;
    pos.reserve(b1.order());
    neg.reserve(b1.order());
    for (int i = 0; i < b1.order(); ++i) {
        pos.push_back(max(b1.pos(i), b2.pos(i)));
        neg.push_back(min(b1.neg(i), b2.neg(i)));
    }
    return BvfSubset(std::move(pos), std::move(neg));
}

bool leq(const BvfSubset& b1, const BvfSubset& b2) {
    if (b1.order() != b2.order())
        throw std::invalid_argument("leq: subsets have different carriers");
    for (int i = 0; i < b1.order(); ++i) {
        if (b2.pos(i) < b1.pos(i)) return false;
        if (b1.neg(i) < b2.neg(i)) return false;
    }
    return true;
}

}  // namespace bvfla
