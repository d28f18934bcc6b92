#pragma once

#include <cstdint>
#include <vector>

#include "cfrac.hpp"
#include "numerics.hpp"
#include "partitions.hpp"

namespace partdyn {

// Elementary arithmetic functions, computed by trial division (exact, n >= 1).
Int totient(const Int& n);
Int divisor_count(const Int& n);             // sigma_0
Int divisor_sum(const Int& n);               // sigma_1
Int divisor_sigma(int j, const Int& n);      // dispatch, j in {0,1}

// Number of partitions of n with exactly two distinct part sizes, three ways:
//   p2_formula: depth sum over all r with a divisor-count weight,
//   p2_kim:     closed form in sigma_0 / sigma_1,
//   p2_brute:   direct enumeration (independent oracle).
Int p2_formula(const Int& n);
Int p2_kim(const Int& n);
Int p2_brute(const Int& n);

// Same count restricted to partitions whose two part sizes are coprime and
// whose multiplicities are coprime:
//   pF2(n) = (1/2) ( sum_{1<=r<n, gcd(r,n)=1} depth(r/n) - phi(n) ).
Int pF2(const Int& n);
Int pF2_brute(const Int& n);  // enumeration with gcd(n1,n2) = 1 and gcd(k1,k2) = 1

// One orbit in the cover of all two-distinct-part partitions of n:
// root (n/e, r/e) x [e, 0], members are its generations 1 .. depth-1.
struct CoverOrbit {
    Int r, e;
    Partition root;
    std::vector<Partition> members;
};

// Decompose the set of partitions of n with exactly two distinct part sizes
// into disjoint orbit segments; union over 1 <= r <= n/2, e | gcd(r, n).
std::vector<CoverOrbit> orbit_cover_decomposition(const Int& n);

// True iff (n1^k1, n2^k2) arises in some orbit of a coprime fraction, i.e.
// gcd(n1, n2) = 1 and gcd(k1, k2) = 1.
bool obtainable(const Int& n1, const Int& n2, const Int& k1, const Int& k2);

}  // namespace partdyn
