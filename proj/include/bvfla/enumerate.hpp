#pragma once

#include "bvfla/ideals.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>

namespace bvfla {

struct EnumerationTask {
    int order = 2;
    bool up_to_isomorphism = false;
    bool require_left_identity = false;
    long long budget = 10'000'000;  // attempted cell assignments
    int threads = 1;
};

struct EnumerationResult {
    std::vector<Magma> magmas;
    long long nodes = 0;
    bool budget_exhausted = false;  // partial output when true
};

// All left-invertive Cayley tables of the given order, DFS cell-by-cell in
// row-major order with incremental consistency pruning. Output order is
// lexicographic on the flattened table (canonical forms, deduplicated and
// sorted, when up_to_isomorphism is set).
EnumerationResult enumerate_magmas(const EnumerationTask& task);

// Lexicographically least relabeling over all permutations of the carrier.
std::vector<int> canonical_form(const Magma& m);
Magma canonicalize(const Magma& m);
int automorphism_count(const Magma& m);

// Census stream: one JSON header line, then one table per line with rows
// separated by " / ".
void write_census(std::ostream& os, const EnumerationResult& r, const EnumerationTask& task);
std::string table_line(const Magma& m);

// Deterministic quantized random subset: degrees on the grid {0..q}/q
// (negated for the negative component), derived from the seed via
// splitmix64. Portable across platforms.
BvfSubset random_bvf(int order, int quantization, std::uint64_t seed);

// splitmix64 step; used wherever derived seeds are needed.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Boolean combination of ideal-class names: '&', '|', '!', parentheses.
class TargetExpr {
public:
    struct Node;

    static TargetExpr parse(const std::string& text);  // throws ParseError
    bool eval(const Classification& c) const;
    const std::string& text() const { return text_; }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct SearchSpec {
    std::string target;
    std::vector<int> orders = {3, 4};
    int quantization = 10;
    std::uint64_t seed = 1;
    long long max_trials = 100'000;
    bool up_to_isomorphism = true;
    long long enum_budget = 10'000'000;
    int threads = 1;
};

struct SearchHit {
    Magma magma;
    BvfSubset subset;
    Classification classification;
    long long trial = 0;  // 1-based trial index that produced the hit
};

struct SearchResult {
    std::optional<SearchHit> hit;
    long long trials = 0;
    bool enum_budget_exhausted = false;
};

// Round-robin over (enumerated magmas x subset stream); each magma's stream
// starts with Gamma followed by seeded random subsets. Deterministic for a
// fixed spec.
SearchResult search(const SearchSpec& spec);

}  // namespace bvfla
