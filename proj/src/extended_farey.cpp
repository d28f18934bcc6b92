#include "extended_farey.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partdyn {

std::string TwoPartRaw::str() const {
    std::ostringstream os;
    os << "(" << n1 << "," << n2 << ")x[" << k1 << "," << k2 << "]";
    return os.str();
}

EfStepResult ef_step(const Partition& two_part) {
    if (two_part.m() != 2) throw std::domain_error("ef_step: requires exactly two parts");
    const Int& n1 = two_part.parts()[0];
    const Int& n2 = two_part.parts()[1];
    const Int& k1 = two_part.mults()[0];
    const Int& k2 = two_part.mults()[1];
    Int d = n1 - n2;
    int branch = n2 >= d ? 0 : 1;  // tie takes branch 0
    std::vector<Int> parts = branch == 0 ? std::vector<Int>{n2, d} : std::vector<Int>{d, n2};
    std::vector<Int> mults =
        branch == 0 ? std::vector<Int>{k1 + k2, k1} : std::vector<Int>{k1, k1 + k2};
    bool terminal = parts[0] == parts[1];
    Partition state = Partition::canonicalize(parts, mults);
    return {branch, std::move(parts), std::move(mults), terminal, std::move(state)};
}

EfOrbit ef_orbit(const Int& n, const Int& r, const Int& e) {
    if (r < 1 || n <= r) throw std::domain_error("ef_orbit: requires 1 <= r < n");
    if (e < 1) throw std::domain_error("ef_orbit: requires e >= 1");
    EfOrbit orbit{Partition::make({n, r}, {e, Int(0)}), {}};
    Int steps_left = depth(r, n);
    Partition cur = orbit.root;
    while (steps_left-- > 0) {
        EfStepResult s = ef_step(cur);
        orbit.steps.push_back({s.branch, s.parts, s.mults, s.terminal});
        if (s.terminal) {
            if (steps_left != 0)
                throw std::logic_error("ef_orbit: terminal before depth steps");
            break;
        }
        cur = s.state;
    }
    if (orbit.steps.empty() || !orbit.steps.back().terminal)
        throw std::logic_error("ef_orbit: did not terminate at depth steps");
    return orbit;
}

std::vector<Partition> orbit_of_fraction(const Int& r, const Int& n) {
    if (r < 1 || n <= r) throw std::domain_error("orbit_of_fraction: requires 1 <= r < n");
    if (checked_gcd(r, n) != 1)
        throw std::domain_error("orbit_of_fraction: requires gcd(r,n) = 1");
    EfOrbit orbit = ef_orbit(n, r, 1);
    std::vector<Partition> out;
    for (std::size_t i = 0; i + 1 < orbit.steps.size(); ++i)
        out.push_back(Partition::canonicalize(orbit.steps[i].raw_parts,
                                              orbit.steps[i].raw_mults));
    return out;
}

bool paired_fraction_check(const Int& r, const Int& n) {
    if (checked_gcd(r, n) != 1)
        throw std::domain_error("paired_fraction_check: requires gcd(r,n) = 1");
    std::vector<Partition> a = orbit_of_fraction(r, n);
    std::vector<Partition> b = orbit_of_fraction(n - r, n);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].same_partition(b[i])) return false;
    return true;
}

Frac find_root(const Partition& two_part) {
    if (two_part.m() != 2) throw std::domain_error("find_root: requires exactly two parts");
    const Int& n1 = two_part.parts()[0];
    const Int& n2 = two_part.parts()[1];
    const Int& k1 = two_part.mults()[0];
    const Int& k2 = two_part.mults()[1];
    if (checked_gcd(n1, n2) != 1) throw std::domain_error("find_root: requires gcd(n1,n2) = 1");
    if (checked_gcd(k1, k2) != 1)  // gcd(k1,0) = k1, so k2 = 0 forces k1 = 1
        throw std::domain_error("find_root: requires gcd(k1,k2) = 1");
    if (k2 == 0) {
        // Generation-0 state (n1,n2)x[1,0]: the root fraction is n2/n1 itself.
        Int r = n2 < n1 - n2 ? n2 : n1 - n2;
        return Frac::make(r, n1);
    }
    // Solve h2*k1 - h1*k2 = 1 with 0 <= h1 < k1; then 1 <= h2 <= k2 follows.
    Int h1 = 0, h2 = 0;
    {
        // Extended Euclid: x*k1 + y*k2 = 1.
        Int old_r = k1, rr = k2, old_x = 1, x = 0, old_y = 0, y = 1;
        while (rr != 0) {
            Int qt = old_r / rr;
            Int t;
            t = old_r - qt * rr; old_r = rr; rr = t;
            t = old_x - qt * x;  old_x = x;  x = t;
            t = old_y - qt * y;  old_y = y;  y = t;
        }
        h2 = old_x;
        h1 = -old_y;
        // Shift into the window 0 <= h1 < k1.
        Int t;
        if (h1 >= 0) t = h1 / k1;
        else t = -Int(((-h1) + k1 - 1) / k1);
        h1 -= t * k1;
        h2 -= t * k2;
    }
    if (h2 * k1 - h1 * k2 != 1 || h1 < 0 || h1 >= k1 || h2 < 1 || h2 > k2)
        throw std::logic_error("find_root: Bezout window failed");
    Int r = h2 * n2 + h1 * n1;
    Int n = k2 * n2 + k1 * n1;
    Int rep = r < n - r ? r : n - r;
    return Frac::make(rep, n);
}

Frac reversed_partner(const Int& r, const Int& n) {
    if (checked_gcd(r, n) != 1)
        throw std::domain_error("reversed_partner: requires gcd(r,n) = 1");
    CFExpansion cf = cf_expand(Frac::make(r, n));
    std::vector<Int> rev(cf.digits.rbegin(), cf.digits.rend());
    Frac out = cf_value(CFExpansion::make(std::move(rev)));
    if (out.q != n) throw std::logic_error("reversed_partner: denominator changed");
    return out;
}

namespace {

void require_v1_domain(const Int& r, const Int& n) {
    if (checked_gcd(r, n) != 1)
        throw std::domain_error("palindrome_v1_check: requires gcd(r,n) = 1");
    if (r < 1 || 2 * r >= n)
        throw std::domain_error("palindrome_v1_check: requires 1 <= r < n/2");
}

}  // namespace

bool palindrome_v1_check(const Int& r, const Int& n, const Int& m) {
    require_v1_domain(r, n);
    Frac dual = reversed_partner(r, n);
    // The reversed digits are the mirror: cross-check the two derivations.
    if (mirror(cf_expand(Frac::make(r, n))) != dual) return false;
    std::vector<Partition> a = orbit_of_fraction(r, n);
    std::vector<Partition> b = orbit_of_fraction(dual.p, n);
    const Int l = a.size();
    if (Int(b.size()) != l) return false;
    if (m < 1 || m > l)
        throw std::domain_error("palindrome_v1_check: requires 1 <= m <= depth-1");
    std::size_t mi = static_cast<std::size_t>(m);
    std::size_t li = static_cast<std::size_t>(l);
    return a[mi - 1].conjugate().same_partition(b[li - mi]);
}

bool palindrome_v1_check_all(const Int& r, const Int& n) {
    require_v1_domain(r, n);
    Frac dual = reversed_partner(r, n);
    if (mirror(cf_expand(Frac::make(r, n))) != dual) return false;
    BinaryWord w = extended_binary_sequence(Frac::make(r, n));
    BinaryWord wd = extended_binary_sequence(dual);
    if (BinaryWord(w.rbegin(), w.rend()) != wd) return false;
    std::vector<Partition> a = orbit_of_fraction(r, n);
    std::vector<Partition> b = orbit_of_fraction(dual.p, n);
    const std::size_t l = a.size();
    if (b.size() != l) return false;
    for (std::size_t m = 1; m <= l; ++m)
        if (!a[m - 1].conjugate().same_partition(b[l - m])) return false;
    return true;
}

Partition ef_apply_branch(int branch, const Partition& two_part) {
    if (two_part.m() != 2) throw std::domain_error("ef_apply_branch: requires exactly two parts");
    const Int& n1 = two_part.parts()[0];
    const Int& n2 = two_part.parts()[1];
    const Int& k1 = two_part.mults()[0];
    const Int& k2 = two_part.mults()[1];
    Int d = n1 - n2;
    if (branch == 0) {
        if (n2 < d) throw std::domain_error("ef_apply_branch: branch 0 needs n2 >= n1-n2");
        return Partition::canonicalize({n2, d}, {k1 + k2, k1});
    }
    if (branch == 1) {
        if (d < n2) throw std::domain_error("ef_apply_branch: branch 1 needs n1-n2 >= n2");
        return Partition::canonicalize({d, n2}, {k1, k1 + k2});
    }
    throw std::invalid_argument("ef_apply_branch: branch must be 0 or 1");
}

Partition palindrome_v2_apply(const Partition& final_state, const BinaryWord& word) {
    Partition cur = final_state.conjugate();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it != '0' && *it != '1')
            throw std::invalid_argument("palindrome_v2_apply: word must be over {0,1}");
        cur = ef_apply_branch(*it == '0' ? 0 : 1, cur);
    }
    return cur;
}

TwoPartRaw formal_conjugate(const TwoPartRaw& s) {
    return TwoPartRaw{s.k1 + s.k2, s.k1, s.n2, s.n1 - s.n2};
}

TwoPartRaw apply_formal_branch(int branch, const TwoPartRaw& s) {
    Int d = s.n1 - s.n2;
    if (branch == 0) {
        if (s.n2 < d) throw std::domain_error("apply_formal_branch: branch 0 needs n2 >= n1-n2");
        return TwoPartRaw{s.n2, d, s.k1 + s.k2, s.k1};
    }
    if (branch == 1) {
        if (d < s.n2) throw std::domain_error("apply_formal_branch: branch 1 needs n1-n2 >= n2");
        return TwoPartRaw{d, s.n2, s.k1, s.k1 + s.k2};
    }
    throw std::invalid_argument("apply_formal_branch: branch must be 0 or 1");
}

TwoPartRaw palindrome_v2_apply_raw(const TwoPartRaw& final_state, const BinaryWord& word) {
    TwoPartRaw cur = formal_conjugate(final_state);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it != '0' && *it != '1')
            throw std::invalid_argument("palindrome_v2_apply_raw: word must be over {0,1}");
        cur = apply_formal_branch(*it == '0' ? 0 : 1, cur);
    }
    return cur;
}

bool scale_orbit_check(const Int& n, const Int& r, const Int& d, const Int& e) {
    if (d < 1 || e < 1) throw std::domain_error("scale_orbit_check: requires d,e >= 1");
    EfOrbit base = ef_orbit(n, r, 1);
    EfOrbit scaled = ef_orbit(d * n, d * r, e);
    if (base.steps.size() != scaled.steps.size()) return false;
    for (std::size_t i = 0; i < base.steps.size(); ++i) {
        const auto& b = base.steps[i];
        const auto& s = scaled.steps[i];
        if (b.branch != s.branch) return false;
        for (std::size_t j = 0; j < 2; ++j) {
            if (s.raw_parts[j] != d * b.raw_parts[j]) return false;
            if (s.raw_mults[j] != e * b.raw_mults[j]) return false;
        }
    }
    return true;
}

}  // namespace partdyn
