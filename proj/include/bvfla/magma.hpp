#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bvfla {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Finite groupoid on {0, ..., n-1}; the Cayley table is row-major with the
// row picking the left operand. Element names are cosmetic.
class Magma {
public:
    Magma(int order, std::vector<int> table, std::vector<std::string> names = {});

    // Text format: first non-blank line is the order, an optional line
    // starting with '#' declares element names, then exactly n rows of n
    // entries (declared names or 0-based indices).
    static Magma parse(std::istream& in);
    static Magma parse(const std::string& text);
    static Magma parse_file(const std::string& path);

    int order() const { return order_; }
    int at(int x, int y) const { return table_[x * order_ + y]; }
    const std::vector<int>& table() const { return table_; }

    bool has_names() const { return !names_.empty(); }
    std::string name(int i) const;
    std::string format() const;
    // FNV-1a over the order and cells; used to identify instances in reports.
    std::string hash() const;

    friend bool operator==(const Magma&, const Magma&) = default;

private:
    int order_;
    std::vector<int> table_;
    std::vector<std::string> names_;
};

enum class Law { left_invertive, medial, paramedial, associative, commutative, lemma_l1 };

std::string_view law_name(Law law);
std::optional<Law> law_from_name(std::string_view name);

// law arity: number of elements in a witness tuple.
int law_arity(Law law);

struct LawReport {
    Law law;
    bool holds = true;
    std::vector<int> witness;  // first failing tuple in row-major order; empty when holds
    int lhs = -1;              // the law's two sides evaluated at the witness
    int rhs = -1;
};

// Exhaustive check over all tuples, row-major, first failure reported.
LawReport check_law(const Magma& m, Law law);

// Least e with e.x = x for all x.
std::optional<int> find_left_identity(const Magma& m);

// Checks a(bc) = b(ac). Requires a left-invertive magma with a left
// identity; throws std::invalid_argument otherwise.
LawReport check_lemma_l1(const Magma& m);

struct CrispVerdict {
    bool holds = true;
    std::vector<int> witness;  // elements fed to the products
    int product = -1;          // the element that escaped the subset
};

struct CrispClassification {
    CrispVerdict subsemigroup;  // A.A in A
    CrispVerdict left_ideal;    // S.A in A
    CrispVerdict right_ideal;   // A.S in A
    CrispVerdict two_sided;
    CrispVerdict interior;      // (S.A).S in A
    CrispVerdict bi;            // subsemigroup and (A.S).A in A
};

// Subset must be nonempty with in-range indices; throws std::invalid_argument.
CrispClassification classify_crisp(const Magma& m, const std::vector<int>& subset);

// Law checks for the integer operation a.b = b - a over the window
// [lo, hi] x [lo, hi] (exact integer arithmetic, no wraparound for sane
// windows).
struct IntLawReport {
    Law law;
    bool holds = true;
    std::vector<long long> witness;
    long long lhs = 0;
    long long rhs = 0;
};

IntLawReport sampled_law_check(long long lo, long long hi, Law law);

}  // namespace bvfla
