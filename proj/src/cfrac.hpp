#pragma once

#include "numerics.hpp"

#include <utility>

namespace partdyn {

// Reduced fraction p/q with 0 < p <= q (unit interval; 1/1 allowed as the
// tree's level-0 vertex).
struct Frac {
    Int p, q;

    // Reduces and validates 0 < num/den <= 1.
    static Frac make(Int num, Int den);
    static Frac parse(const std::string& text);  // "8/19"

    bool operator==(const Frac&) const = default;
    bool operator<(const Frac& o) const { return p * o.q < o.p * q; }

    std::string str() const;
};

// Continued fraction digits [a1,...,ak] of a fraction in (0,1]; canonical form
// has a_k >= 2 except for the single-digit expansion [1] of 1/1.
struct CFExpansion {
    std::vector<Int> digits;

    // Validates digits >= 1 and folds a trailing 1 into its predecessor
    // ([..., a, 1] -> [..., a+1]), so the stored form is canonical.
    static CFExpansion make(std::vector<Int> digits);

    bool operator==(const CFExpansion&) const = default;
};

// Convergents p_j/q_j, j = 0..k, built from p0=0, q0=1, p1=1, q1=a1.
struct ConvergentList {
    std::vector<std::pair<Int, Int>> pq;
};

CFExpansion cf_expand(const Frac& x);
ConvergentList convergents(const CFExpansion& cf);
Frac cf_value(const CFExpansion& cf);  // evaluates the digits back to a fraction
Frac mirror(const CFExpansion& cf);    // q_{k-1}/q_k = value of the reversed digits

}  // namespace partdyn
