#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "cfrac.hpp"
#include "numerics.hpp"
#include "partitions.hpp"

namespace partdyn {

// One application of the cone map on integer tuples x_0 > x_1 > ... > x_n > 0:
//   x_1 + x_n > x_0:  (x_1, x_2, ..., x_n, x_0 - x_1)
//   x_1 + x_n < x_0:  (x_0 - x_n, x_1, ..., x_n)
// The boundary x_1 + x_n = x_0 is a domain error (it is handled at the
// partition level, where the dimension drops).  With two coordinates this is
// the homogeneous form of the interval map on x_1/x_0.
struct TriPointStep {
    int branch;  // 0 or 1
    std::vector<Int> image;
};
TriPointStep tri_point_step(const std::vector<Int>& x);

// One application of the dual map on partitions with m >= 2 distinct parts.
// For m >= 3 the branch is decided by n_2 + n_m against n_1 ('0' / '1' / 'D');
// m = 2 falls back to the two-part step.  The raw image keeps unmerged parts
// so an equal-parts terminal row is visible before canonicalization.
struct TriStepResult {
    char branch;  // '0', '1', or 'D'
    std::vector<Int> parts, mults;
    bool terminal;  // raw parts all equal
    Partition state;
};
TriStepResult tri_step(const Partition& p);

// Forced application of branch '0' or '1' with the weak form of the branch
// predicate (equality admitted; degenerate equal parts merge away in the
// canonical result).  Used to run a recorded branch word backwards.
Partition tri_apply_branch(int branch, const Partition& p);

// Full orbit from a root partition down to the equal-parts terminal row.
// The sum of parts strictly decreases each step, so this always terminates.
struct TriOrbit {
    Partition root;
    struct Step {
        char branch;
        std::vector<Int> raw_parts, raw_mults;
        bool terminal;
    };
    std::vector<Step> steps;
};
TriOrbit tri_orbit(const Partition& root);

// Inverse branches.  Each is a section of tri_step: applying the forward step
// to the result recovers the input on the stated branch.  Preconditions are
// on multiplicities only; the part inequalities hold automatically.
Partition tri_inv_0(const Partition& p);  // requires k_m >= 1 and k_1 >= k_m
Partition tri_inv_1(const Partition& p);  // requires k_1 < k_m
// The boundary branch has one inverse per k in [1, min(k_1, k_m)].
Int tri_inv_d_count(const Partition& p);
Partition tri_inv_d(const Partition& p, const Int& k);

// Orbits restricted to branches '0' and '1', stopping at the first state with
// n_1 = n_2 + n_m (included).  Exact-arithmetic reference walker; the root's
// multiplicities are [1, 0, ..., 0].
struct TriExactState {
    std::vector<Int> parts, mults;
};
std::vector<TriExactState> allowable_orbit(const std::vector<Int>& root_parts);

// Sweep all roots with m distinct parts and largest part <= weight_bound
// (the largest part is the conserved weight of the orbit).  Orbits are walked
// with int64 arithmetic (weight conservation bounds every multiplicity by the
// weight) and deduplicated: a state already visited is not expanded again,
// but the edge into it is still reported.  on_state sees each distinct state
// once; on_edge sees each traversed edge.
struct TriRawState {
    std::vector<std::int64_t> parts, mults;
};
struct AllowableSweepStats {
    std::size_t roots = 0, states = 0, edges = 0;
};
AllowableSweepStats allowable_sweep(
    int m, std::int64_t weight_bound,
    const std::function<void(const TriRawState&, bool is_root)>& on_state,
    const std::function<void(const TriRawState&, const TriRawState&)>& on_edge);

// The set of multiplicity vectors occurring in those orbits (roots included).
std::set<std::vector<Int>> allowable_search(int m, std::int64_t weight_bound);

}  // namespace partdyn
