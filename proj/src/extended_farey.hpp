#pragma once

#include "farey.hpp"
#include "partitions.hpp"

namespace partdyn {

// Raw two-part state (n1,n2)x[k1,k2]. Unlike Partition this form may be
// degenerate (equal parts, zero multiplicities anywhere): the conjugation
// identities pass through such states, so they stay first-class here.
struct TwoPartRaw {
    Int n1, n2, k1, k2;
    bool operator==(const TwoPartRaw&) const = default;
    std::string str() const;  // "(n1,n2)x[k1,k2]"
};

struct EfStepResult {
    int branch;                     // 0 or 1; the tie n1 = 2*n2 takes branch 0
    std::vector<Int> parts, mults;  // raw image; parts equal exactly at the tie
    bool terminal;                  // raw parts equal
    Partition state;                // canonical image (merged when terminal)
};

// One application of the extended map to a two-part state:
//   branch 0 (n2 >= n1-n2): (n2, n1-n2) x [k1+k2, k1]
//   branch 1 (n1-n2 >= n2): (n1-n2, n2) x [k1, k1+k2]
EfStepResult ef_step(const Partition& two_part);

struct EfOrbit {
    Partition root;  // (n,r)x[e,0]
    struct Step {
        int branch;
        std::vector<Int> raw_parts, raw_mults;
        bool terminal;
    };
    std::vector<Step> steps;  // exactly depth(r/n) entries; last is terminal
};

EfOrbit ef_orbit(const Int& n, const Int& r, const Int& e);

// Generations 1..depth-1 of the orbit of (n,r)x[1,0]: the proper two-part
// partitions of n attached to r/n. Requires gcd(r,n) = 1.
std::vector<Partition> orbit_of_fraction(const Int& r, const Int& n);

// r/n and (n-r)/n generate identical generations 1..depth-1.
bool paired_fraction_check(const Int& r, const Int& n);

// Recovers the fraction whose orbit contains the given two-part partition
// (gcd(n1,n2) = gcd(k1,k2) = 1), returning the representative min(r,n-r)/n.
Frac find_root(const Partition& two_part);

// The dual fraction whose digits are the reversal of r/n's (equals the mirror).
Frac reversed_partner(const Int& r, const Int& n);

// Conjugate of generation m of r/n equals generation (l+1-m) of the reversed
// partner, where l = depth - 1 counts the proper generations.  Requires
// gcd(r,n) = 1, 1 <= r < n/2, 1 <= m <= l.  Also asserts the partner's digits
// are the reversal of r/n's.
bool palindrome_v1_check(const Int& r, const Int& n, const Int& m);

// All generations at once, plus the extended-branch-word reversal identity.
bool palindrome_v1_check_all(const Int& r, const Int& n);

// Forced application of one branch with the weak domain inequality (the tie
// is admitted on both branches; equal raw parts merge in the result).
Partition ef_apply_branch(int branch, const Partition& two_part);

// Applies the reversed word to the conjugate of a final state; with the word
// that produced final_state from some start, this returns the start's
// conjugate.  The empty word returns conjugate(final_state) directly.
Partition palindrome_v2_apply(const Partition& final_state, const BinaryWord& word);

// Formal two-part conjugate (k1+k2, k1) x [n2, n1-n2]; degenerate forms allowed.
TwoPartRaw formal_conjugate(const TwoPartRaw& s);

// Applies the branch formula to a raw state after checking its (weak) domain
// inequality; throws when the inequality fails.
TwoPartRaw apply_formal_branch(int branch, const TwoPartRaw& s);

// Raw-state version of palindrome_v2_apply: runs the identity through the
// degenerate endpoints (terminal rows, zero-multiplicity roots) exactly.
TwoPartRaw palindrome_v2_apply_raw(const TwoPartRaw& final_state, const BinaryWord& word);

// Orbit of (dn,dr)x[e,0] is the orbit of (n,r)x[1,0] with parts scaled by d and
// multiplicities by e, stepwise.
bool scale_orbit_check(const Int& n, const Int& r, const Int& d, const Int& e);

}  // namespace partdyn
