#pragma once

#include "bvfla/enumerate.hpp"

#include <cstdint>

namespace bvfla {

enum class TheoremStatus { holds, fails, not_applicable };

std::string_view theorem_status_name(TheoremStatus s);

struct TheoremReport {
    std::string id;
    TheoremStatus status = TheoremStatus::holds;
    long long checked = 0;           // instances (tuples) examined
    std::string note;                // reason when not applicable, remarks otherwise
    nlohmann::json witness;          // null unless status == fails
    nlohmann::json instance;         // magma hash, seeds, sample counts

    bool holds() const { return status == TheoremStatus::holds; }
    bool applicable() const { return status != TheoremStatus::not_applicable; }
};

// Monotone fixpoint closures on the quantized degree lattice; each returns a
// subset satisfying the named condition (degrees only ever move toward the
// condition, over a finite value set, so the iteration terminates).
BvfSubset close_to_left_ideal(const Magma& m, BvfSubset b);
BvfSubset close_to_right_ideal(const Magma& m, BvfSubset b);
BvfSubset close_to_ideal(const Magma& m, BvfSubset b);
BvfSubset close_to_subsemigroup(const Magma& m, BvfSubset b);

// Single-instance verifiers. Hypothesis failures come back as
// status == not_applicable with the reason in `note`, never as `fails`.
TheoremReport verify_bvfs_is_la(const Magma& m, const BvfSubset& b1, const BvfSubset& b2,
                                const BvfSubset& b3);
TheoremReport verify_medial_in_bvfs(const Magma& m, const BvfSubset& b1, const BvfSubset& b2,
                                    const BvfSubset& b3, const BvfSubset& b4);
// b1 must be a right ideal and b2 a left ideal; asserts b1 o b2 <= b1 meet b2.
TheoremReport verify_product_in_meet(const Magma& m, const BvfSubset& b1, const BvfSubset& b2);
// cls in {subsemigroup, left, right, two_sided}.
TheoremReport verify_meet_closure(const Magma& m, const BvfSubset& b1, const BvfSubset& b2,
                                  IdealClass cls);
// Needs a left identity and b a left ideal; asserts Gamma o b == b.
TheoremReport verify_gamma_absorption(const Magma& m, const BvfSubset& b);
// Crisp membership in cls iff the characteristic subset is in the BVF class.
TheoremReport verify_characteristic_bridge(const Magma& m, const std::vector<int>& subset,
                                           IdealClass cls);
// Needs a left identity; asserts right-ideal and interior-ideal verdicts agree.
TheoremReport verify_right_iff_interior(const Magma& m, const BvfSubset& b);
// Needs a left identity and b a left ideal; asserts b is a bi-ideal. (The
// interior-ideal property is implied for such b and is not a hypothesis.)
TheoremReport verify_left_ideal_is_bi(const Magma& m, const BvfSubset& b);

struct SuiteOptions {
    std::uint64_t seed = 1;
    int samples = 200;  // random subsets added to the instance family
    int quantization = 10;
};

// Runs every verifier over the family {fixtures + seeded random subsets},
// one aggregated report per theorem id, deterministic for fixed inputs.
// An empty family (no fixtures, samples == 0) yields zero entries.
std::vector<TheoremReport> run_all(const Magma& m, const std::vector<BvfSubset>& fixtures,
                                   const SuiteOptions& options = {});

nlohmann::json reports_to_json(const std::vector<TheoremReport>& reports);
std::string reports_to_text(const std::vector<TheoremReport>& reports);
bool all_applicable_hold(const std::vector<TheoremReport>& reports);

}  // namespace bvfla
