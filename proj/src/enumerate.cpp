#include "bvfla/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace bvfla {

namespace {

std::uint64_t splitmix_next(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4b9feull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// DFS over cells in row-major order. After each assignment every triple
// whose evaluation is fully decided is re-checked; n <= 5 keeps the rescan
// cheap and the pruning early.
struct Dfs {
    int n;
    bool require_left_identity;
    long long budget;
    long long nodes = 0;
    bool exhausted = false;
    std::vector<int> cells;
    std::vector<std::vector<int>>* out;

    explicit Dfs(int n_, bool li, long long budget_, std::vector<std::vector<int>>* out_)
        : n(n_), require_left_identity(li), budget(budget_), cells(n_ * n_, -1), out(out_) {}

    int at(int x, int y) const { return cells[x * n + y]; }

    bool consistent() const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = at(a, b);
                if (ab < 0) continue;
                for (int c = 0; c < n; ++c) {
                    int cb = at(c, b);
                    if (cb < 0) continue;
                    int l = at(ab, c);
                    int r = at(cb, a);
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
            }
        return true;
    }

    bool has_left_identity() const {
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) ok = at(e, x) == x;
            if (ok) return true;
        }
        return false;
    }

    void run(int ci) {
        if (exhausted) return;
        if (ci == n * n) {
            if (!require_left_identity || has_left_identity()) out->push_back(cells);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (nodes >= budget) {
                exhausted = true;
                break;
            }
            ++nodes;
            cells[ci] = v;
            if (consistent()) run(ci + 1);
            if (exhausted) break;
        }
        cells[ci] = -1;
    }
};

}  // namespace

EnumerationResult enumerate_magmas(const EnumerationTask& task) {
    const int n = task.order;
    if (n < 1 || n > 5)
        throw std::invalid_argument("enumeration supports orders 1 through 5");
    if (task.budget < 1) throw std::invalid_argument("enumeration budget must be positive");

    std::vector<std::vector<int>> tables;
    long long nodes = 0;
    bool exhausted = false;

    int workers = std::max(1, std::min(task.threads, n));
    if (workers == 1) {
        Dfs dfs(n, task.require_left_identity, task.budget, &tables);
        dfs.run(0);
        nodes = dfs.nodes;
        exhausted = dfs.exhausted;
    } else {
        // Partition on the first cell's value; worker w owns values
        // v with v % workers == w and an even budget share. Results are
        // stitched back in value order, so scheduling cannot change output.
        std::vector<std::vector<std::vector<int>>> by_value(n);
        std::vector<long long> wnodes(workers, 0);
        std::vector<char> wexhausted(workers, 0);
        auto work = [&](int w) {
            long long share = task.budget / workers;
            Dfs dfs(n, task.require_left_identity, share, nullptr);
            for (int v = w; v < n; v += workers) {
                dfs.out = &by_value[v];
                if (dfs.nodes >= dfs.budget) {
                    dfs.exhausted = true;
                    break;
                }
                ++dfs.nodes;
                dfs.cells[0] = v;
                if (dfs.consistent()) dfs.run(1);
                dfs.cells[0] = -1;
                if (dfs.exhausted) break;
            }
            wnodes[w] = dfs.nodes;
            wexhausted[w] = dfs.exhausted ? 1 : 0;
        };
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
        for (int w = 0; w < workers; ++w) {
            nodes += wnodes[w];
            exhausted |= wexhausted[w] != 0;
        }
        for (int v = 0; v < n; ++v)
            for (auto& t : by_value[v]) tables.push_back(std::move(t));
    }

    EnumerationResult res;
    res.nodes = nodes;
    res.budget_exhausted = exhausted;
    if (task.up_to_isomorphism) {
        std::set<std::vector<int>> canon;
        for (const auto& t : tables) canon.insert(canonical_form(Magma(n, t)));
        for (const auto& t : canon) res.magmas.emplace_back(n, t);
    } else {
        res.magmas.reserve(tables.size());
        for (auto& t : tables) res.magmas.emplace_back(n, std::move(t));
    }
    return res;
}

std::vector<int> canonical_form(const Magma& m) {
    const int n = m.order();
    if (n > 7) throw std::invalid_argument("canonical form is factorial in the order; max is 7");
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<int> inv(n), cand(n * n), best;
    do {
        for (int i = 0; i < n; ++i) inv[p[i]] = i;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cand[i * n + j] = p[m.at(inv[i], inv[j])];
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

Magma canonicalize(const Magma& m) { return Magma(m.order(), canonical_form(m)); }

int automorphism_count(const Magma& m) {
    const int n = m.order();
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    int count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) ok = p[m.at(i, j)] == m.at(p[i], p[j]);
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

std::string table_line(const Magma& m) {
    std::ostringstream os;
    for (int x = 0; x < m.order(); ++x) {
        if (x) os << " / ";
        for (int y = 0; y < m.order(); ++y) {
            if (y) os << ' ';
            os << m.at(x, y);
        }
    }
    return os.str();
}

void write_census(std::ostream& os, const EnumerationResult& r, const EnumerationTask& task) {
    nlohmann::json header{{"order", task.order},
                          {"count", r.magmas.size()},
                          {"up_to_isomorphism", task.up_to_isomorphism},
                          {"budget_exhausted", r.budget_exhausted}};
    os << header.dump() << '\n';
    for (const auto& m : r.magmas) os << table_line(m) << '\n';
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4b9feull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
    return mix64(h + 0x9e3779b97f4a7c15ull * (index + 1));
}

BvfSubset random_bvf(int order, int quantization, std::uint64_t seed) {
    if (order < 1) throw std::invalid_argument("random_bvf: order must be at least 1");
    if (quantization < 1) throw std::invalid_argument("random_bvf: quantization must be at least 1");
    std::uint64_t s = seed;
    const long q = quantization;
    std::vector<Rational> pos, neg;
    pos.reserve(order);
    neg.reserve(order);
    for (int i = 0; i < order; ++i)
        pos.emplace_back(static_cast<long>(splitmix_next(s) % (q + 1)), q);
    for (int i = 0; i < order; ++i)
        neg.emplace_back(-static_cast<long>(splitmix_next(s) % (q + 1)), q);
    return BvfSubset(std::move(pos), std::move(neg));
}

struct TargetExpr::Node {
    enum class Kind { flag, negation, conjunction, disjunction };
    Kind kind;
    IdealClass cls = IdealClass::subsemigroup;
    std::shared_ptr<const Node> a, b;

    bool eval(const Classification& c) const {
        switch (kind) {
            case Kind::flag: return c.holds(cls);
            case Kind::negation: return !a->eval(c);
            case Kind::conjunction: return a->eval(c) && b->eval(c);
            case Kind::disjunction: return a->eval(c) || b->eval(c);
        }
        return false;
    }
};

namespace {

struct TargetParser {
    const std::string& s;
    size_t i = 0;

    using NodePtr = std::shared_ptr<const TargetExpr::Node>;
    using Node = TargetExpr::Node;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }

    [[noreturn]] void bail(const std::string& msg, size_t at) {
        throw ParseError("target: " + msg, 1, static_cast<int>(at) + 1);
    }

    NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

    NodePtr parse_expr() {
        NodePtr left = parse_and();
        skip_ws();
        while (i < s.size() && s[i] == '|') {
            ++i;
            if (i < s.size() && s[i] == '|') ++i;
            NodePtr right = parse_and();
            left = make({Node::Kind::disjunction, {}, left, right});
            skip_ws();
        }
        return left;
    }

    NodePtr parse_and() {
        NodePtr left = parse_unary();
        skip_ws();
        while (i < s.size() && s[i] == '&') {
            ++i;
            if (i < s.size() && s[i] == '&') ++i;
            NodePtr right = parse_unary();
            left = make({Node::Kind::conjunction, {}, left, right});
            skip_ws();
        }
        return left;
    }

    NodePtr parse_unary() {
        skip_ws();
        if (i < s.size() && s[i] == '!') {
            ++i;
            return make({Node::Kind::negation, {}, parse_unary(), nullptr});
        }
        return parse_atom();
    }

    NodePtr parse_atom() {
        skip_ws();
        if (i >= s.size()) bail("unexpected end of expression", i);
        if (s[i] == '(') {
            ++i;
            NodePtr e = parse_expr();
            skip_ws();
            if (i >= s.size() || s[i] != ')') bail("missing ')'", i);
            ++i;
            return e;
        }
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) bail(std::string("unexpected character '") + s[i] + "'", i);
        std::string word = s.substr(start, i - start);
        auto cls = ideal_class_from_name(word);
        if (!cls) bail("unknown class '" + word + "'", start);
        return make({Node::Kind::flag, *cls, nullptr, nullptr});
    }
};

}  // namespace

TargetExpr TargetExpr::parse(const std::string& text) {
    TargetParser p{text};
    TargetExpr e;
    e.root_ = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size())
        throw ParseError("target: trailing content", 1, static_cast<int>(p.i) + 1);
    e.text_ = text;
    return e;
}

bool TargetExpr::eval(const Classification& c) const { return root_->eval(c); }

SearchResult search(const SearchSpec& spec) {
    TargetExpr target = TargetExpr::parse(spec.target);
    if (spec.orders.empty()) throw std::invalid_argument("search: no orders given");

    std::vector<Magma> pool;
    SearchResult res;
    for (int n : spec.orders) {
        EnumerationTask task;
        task.order = n;
        task.up_to_isomorphism = spec.up_to_isomorphism;
        task.budget = spec.enum_budget;
        task.threads = spec.threads;
        EnumerationResult r = enumerate_magmas(task);
        res.enum_budget_exhausted |= r.budget_exhausted;
        for (auto& m : r.magmas) pool.push_back(std::move(m));
    }
    if (pool.empty()) return res;

    for (long long round = 0;; ++round) {
        for (size_t mi = 0; mi < pool.size(); ++mi) {
            if (res.trials >= spec.max_trials) return res;
            ++res.trials;
            const Magma& m = pool[mi];
            BvfSubset b = round == 0
                              ? BvfSubset::gamma(m.order())
                              : random_bvf(m.order(), spec.quantization,
                                           derive_seed(spec.seed, mi, round));
            Classification c = classify(m, b);
            if (target.eval(c)) {
                res.hit = SearchHit{m, std::move(b), std::move(c), res.trials};
                return res;
            }
        }
    }
}

}  // namespace bvfla
