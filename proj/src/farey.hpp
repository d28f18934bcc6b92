#pragma once

#include "cfrac.hpp"

#include <string>
#include <vector>

namespace partdyn {

// Branch word over {'0','1'}; entry j records which half-interval the j-th
// iterate lies in ('0' on (1/2,1), '1' on (0,1/2)).
using BinaryWord = std::string;

struct FareyStepResult {
    int branch;     // 0 or 1; -1 when terminal
    Frac image;
    bool terminal;  // input was the fixed endpoint 1/2
};

// One application of the interval map: (1-x)/x on (1/2,1), x/(1-x) on (0,1/2).
// x = 1/2 is terminal (both expressions give 1/1). Requires 0 < x < 1.
FareyStepResult farey_step(const Frac& x);

// Inverse branches: child 0 of p/q is q/(p+q), child 1 is p/(p+q). Defined on (0,1].
Frac farey_child(const Frac& x, int branch);

BinaryWord binary_sequence(const Frac& x);           // branches until 1/2 is reached
BinaryWord extended_binary_sequence(const Frac& x);  // sequence with '1' appended

Int depth(const Frac& x);                  // tree level; 1/2 -> 1, 1/1 -> 0
Int depth(const Int& r, const Int& n);     // reduces r/n first
Int depth_from_cf(const CFExpansion& cf);  // digit sum minus 1

// Levels 1..levels of the tree rooted at 1/2; level k holds 2^(k-1) fractions.
// Unsorted order lists each parent's children as (child 1, child 0); sorted
// gives each level ascending.
std::vector<std::vector<Frac>> farey_tree(unsigned levels, bool sorted);

IntMat phi_matrix(int branch);           // inverse-branch matrices, det -1 / +1
IntMat farey_branch_matrix(int branch);  // forward-branch matrices

// Product of inverse-branch matrices along the branch word, times the final
// factor chosen so the determinant is +1. Columns give parents; the column
// sums recover (p,q).
IntMat matrix_of(const Frac& x);

// Fraction whose branch word is w: (p,q) = Phi_{w_1} ... Phi_{w_l} (1,2).
Frac word_to_fraction(const BinaryWord& w);

}  // namespace partdyn
