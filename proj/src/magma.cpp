#include "bvfla/magma.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bvfla {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based character position
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool is_blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    h ^= v;
    return h * 0x100000001b3ull;
}

}  // namespace

Magma::Magma(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
    if (order_ < 1) throw std::invalid_argument("magma: order must be at least 1");
    if (table_.size() != static_cast<size_t>(order_) * order_)
        throw std::invalid_argument("magma: table size does not match order");
    for (int v : table_)
        if (v < 0 || v >= order_) throw std::invalid_argument("magma: table entry out of range");
    if (!names_.empty() && names_.size() != static_cast<size_t>(order_))
        throw std::invalid_argument("magma: name count does not match order");
}

Magma Magma::parse(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, text)
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        if (!is_blank(raw)) lines.emplace_back(ln, raw);
    }
    if (lines.empty()) throw ParseError("empty table file", 1, 1);

    size_t cur = 0;
    auto header = tokenize(lines[cur].second);
    if (header.size() != 1) throw ParseError("expected a single order value", lines[cur].first, header.size() > 1 ? header[1].column : 1);
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(header[0].text, &pos);
        if (pos != header[0].text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("order is not an integer", lines[cur].first, header[0].column);
    }
    if (n < 1) throw ParseError("order must be at least 1", lines[cur].first, header[0].column);
    ++cur;

    std::vector<std::string> names;
    std::unordered_map<std::string, int> name_index;
    if (cur < lines.size()) {
        const std::string& l = lines[cur].second;
        size_t h = l.find_first_not_of(" \t");
        if (h != std::string::npos && l[h] == '#') {
            auto toks = tokenize(l.substr(h + 1));
            if (static_cast<int>(toks.size()) != n)
                throw ParseError("expected " + std::to_string(n) + " element names", lines[cur].first,
                                 static_cast<int>(h) + 1);
            for (int i = 0; i < n; ++i) {
                const auto& t = toks[i];
                if (name_index.count(t.text))
                    throw ParseError("duplicate element name '" + t.text + "'", lines[cur].first,
                                     t.column + static_cast<int>(h) + 1);
                name_index[t.text] = i;
                names.push_back(t.text);
            }
            ++cur;
        }
    }

    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        if (cur >= lines.size())
            throw ParseError("missing table row " + std::to_string(r + 1), ln + 1, 1);
        auto toks = tokenize(lines[cur].second);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("expected " + std::to_string(n) + " entries in row, got " +
                                 std::to_string(toks.size()),
                             lines[cur].first, 1);
        for (const auto& t : toks) {
            if (auto it = name_index.find(t.text); it != name_index.end()) {
                table.push_back(it->second);
                continue;
            }
            bool numeric = !t.text.empty();
            for (char c : t.text)
                if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
            if (!numeric)
                throw ParseError("unknown element '" + t.text + "'", lines[cur].first, t.column);
            int v = 0;
            try {
                v = std::stoi(t.text);
            } catch (const std::exception&) {
                throw ParseError("entry out of range: '" + t.text + "'", lines[cur].first, t.column);
            }
            if (v < 0 || v >= n)
                throw ParseError("entry " + t.text + " out of range for order " + std::to_string(n),
                                 lines[cur].first, t.column);
            table.push_back(v);
        }
        ++cur;
    }
    if (cur < lines.size())
        throw ParseError("unexpected trailing content", lines[cur].first, 1);
    return Magma(n, std::move(table), std::move(names));
}

Magma Magma::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

Magma Magma::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return parse(in);
}

std::string Magma::name(int i) const {
    if (!names_.empty()) return names_[i];
    return std::to_string(i);
}

std::string Magma::format() const {
    std::ostringstream os;
    os << order_ << '\n';
    if (!names_.empty()) {
        os << '#';
        for (const auto& s : names_) os << ' ' << s;
        os << '\n';
    }
    for (int x = 0; x < order_; ++x) {
        for (int y = 0; y < order_; ++y) {
            if (y) os << ' ';
            os << name(at(x, y));
        }
        os << '\n';
    }
    return os.str();
}

std::string Magma::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, static_cast<std::uint64_t>(order_));
    for (int v : table_) h = fnv1a(h, static_cast<std::uint64_t>(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string_view law_name(Law law) {
    switch (law) {
        case Law::left_invertive: return "left_invertive";
        case Law::medial: return "medial";
        case Law::paramedial: return "paramedial";
        case Law::associative: return "associative";
        case Law::commutative: return "commutative";
        case Law::lemma_l1: return "lemma_l1";
    }
    return "?";
}

std::optional<Law> law_from_name(std::string_view name) {
    for (Law law : {Law::left_invertive, Law::medial, Law::paramedial, Law::associative,
                    Law::commutative, Law::lemma_l1})
        if (law_name(law) == name) return law;
    return std::nullopt;
}

int law_arity(Law law) {
    switch (law) {
        case Law::commutative: return 2;
        case Law::medial:
        case Law::paramedial: return 4;
        default: return 3;
    }
}

namespace {

// Evaluates both sides of a law at a tuple; returns {lhs, rhs}.
template <typename Op>
std::pair<long long, long long> law_sides(Op&& op, Law law, const std::vector<long long>& t) {
    switch (law) {
        case Law::left_invertive: return {op(op(t[0], t[1]), t[2]), op(op(t[2], t[1]), t[0])};
        case Law::medial: return {op(op(t[0], t[1]), op(t[2], t[3])), op(op(t[0], t[2]), op(t[1], t[3]))};
        case Law::paramedial: return {op(op(t[0], t[1]), op(t[2], t[3])), op(op(t[3], t[2]), op(t[1], t[0]))};
        case Law::associative: return {op(op(t[0], t[1]), t[2]), op(t[0], op(t[1], t[2]))};
        case Law::commutative: return {op(t[0], t[1]), op(t[1], t[0])};
        case Law::lemma_l1: return {op(t[0], op(t[1], t[2])), op(t[1], op(t[0], t[2]))};
    }
    return {0, 0};
}

}  // namespace

LawReport check_law(const Magma& m, Law law) {
    const int n = m.order();
    const int k = law_arity(law);
    auto op = [&](long long a, long long b) -> long long {
        return m.at(static_cast<int>(a), static_cast<int>(b));
    };
    std::vector<long long> t(k, 0);
    LawReport rep{law};
    while (true) {
        auto [l, r] = law_sides(op, law, t);
        if (l != r) {
            rep.holds = false;
            rep.witness.assign(t.begin(), t.end());
            rep.lhs = static_cast<int>(l);
            rep.rhs = static_cast<int>(r);
            return rep;
        }
        int i = k - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return rep;
}

std::optional<int> find_left_identity(const Magma& m) {
    for (int e = 0; e < m.order(); ++e) {
        bool ok = true;
        for (int x = 0; x < m.order() && ok; ++x) ok = m.at(e, x) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

LawReport check_lemma_l1(const Magma& m) {
    if (!check_law(m, Law::left_invertive).holds)
        throw std::invalid_argument("lemma_l1 check requires a left-invertive magma");
    if (!find_left_identity(m))
        throw std::invalid_argument("lemma_l1 check requires a left identity");
    return check_law(m, Law::lemma_l1);
}

CrispClassification classify_crisp(const Magma& m, const std::vector<int>& subset) {
    const int n = m.order();
    if (subset.empty()) throw std::invalid_argument("crisp classification requires a nonempty subset");
    std::vector<char> in(n, 0);
    for (int a : subset) {
        if (a < 0 || a >= n) throw std::invalid_argument("subset element out of range");
        in[a] = 1;
    }
    std::vector<int> elems;
    for (int a = 0; a < n; ++a)
        if (in[a]) elems.push_back(a);

    CrispClassification c;
    auto fail = [](CrispVerdict& v, std::vector<int> w, int p) {
        if (!v.holds) return;
        v.holds = false;
        v.witness = std::move(w);
        v.product = p;
    };

    for (int x : elems)
        for (int y : elems) {
            int p = m.at(x, y);
            if (!in[p]) {
                fail(c.subsemigroup, {x, y}, p);
                goto sub_done;
            }
        }
sub_done:
    for (int s = 0; s < n && c.left_ideal.holds; ++s)
        for (int a : elems) {
            int p = m.at(s, a);
            if (!in[p]) {
                fail(c.left_ideal, {s, a}, p);
                break;
            }
        }
    for (int a : elems) {
        if (!c.right_ideal.holds) break;
        for (int s = 0; s < n; ++s) {
            int p = m.at(a, s);
            if (!in[p]) {
                fail(c.right_ideal, {a, s}, p);
                break;
            }
        }
    }
    c.two_sided = c.left_ideal.holds ? c.right_ideal : c.left_ideal;

    for (int x = 0; x < n && c.interior.holds; ++x)
        for (int a : elems) {
            if (!c.interior.holds) break;
            for (int z = 0; z < n; ++z) {
                int p = m.at(m.at(x, a), z);
                if (!in[p]) {
                    fail(c.interior, {x, a, z}, p);
                    break;
                }
            }
        }

    if (!c.subsemigroup.holds) {
        c.bi = c.subsemigroup;
    } else {
        for (int a : elems) {
            if (!c.bi.holds) break;
            for (int s = 0; s < n && c.bi.holds; ++s)
                for (int b : elems) {
                    int p = m.at(m.at(a, s), b);
                    if (!in[p]) {
                        fail(c.bi, {a, s, b}, p);
                        break;
                    }
                }
        }
    }
    return c;
}

IntLawReport sampled_law_check(long long lo, long long hi, Law law) {
    if (lo > hi) throw std::invalid_argument("window is empty");
    auto op = [](long long a, long long b) { return b - a; };
    const int k = law_arity(law);
    std::vector<long long> t(k, lo);
    IntLawReport rep{law};
    while (true) {
        auto [l, r] = law_sides(op, law, t);
        if (l != r) {
            rep.holds = false;
            rep.witness = t;
            rep.lhs = l;
            rep.rhs = r;
            return rep;
        }
        int i = k - 1;
        while (i >= 0 && t[i] == hi) t[i--] = lo;
        if (i < 0) break;
        ++t[i];
    }
    return rep;
}

}  // namespace bvfla
