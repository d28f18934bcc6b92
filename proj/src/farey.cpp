#include "farey.hpp"

#include <algorithm>
#include <stdexcept>

namespace partdyn {

FareyStepResult farey_step(const Frac& x) {
    if (x.p >= x.q) throw std::domain_error("farey_step: requires 0 < x < 1");
    Int two_p = 2 * x.p;
    if (two_p == x.q) return {-1, Frac{1, 1}, true};
    if (two_p > x.q) {
        // (1-x)/x = (q-p)/p
        return {0, Frac::make(x.q - x.p, x.p), false};
    }
    // x/(1-x) = p/(q-p)
    return {1, Frac::make(x.p, x.q - x.p), false};
}

Frac farey_child(const Frac& x, int branch) {
    if (branch == 0) return Frac::make(x.q, x.p + x.q);
    if (branch == 1) return Frac::make(x.p, x.p + x.q);
    throw std::invalid_argument("farey_child: branch must be 0 or 1");
}

BinaryWord binary_sequence(const Frac& x) {
    if (x.p >= x.q) throw std::domain_error("binary_sequence: requires 0 < x < 1");
    BinaryWord w;
    Frac cur = x;
    while (true) {
        FareyStepResult s = farey_step(cur);
        if (s.terminal) break;
        w.push_back(s.branch == 0 ? '0' : '1');
        cur = s.image;
    }
    return w;
}

BinaryWord extended_binary_sequence(const Frac& x) {
    BinaryWord w = binary_sequence(x);
    w.push_back('1');
    return w;
}

Int depth(const Frac& x) {
    if (x.p == x.q) return 0;
    CFExpansion cf = cf_expand(x);
    return depth_from_cf(cf);
}

Int depth(const Int& r, const Int& n) {
    if (r < 1 || n < 1 || r > n) throw std::domain_error("depth: requires 1 <= r <= n");
    return depth(Frac::make(r, n));
}

Int depth_from_cf(const CFExpansion& cf) {
    Int s = 0;
    for (const Int& a : cf.digits) s += a;
    return s - 1;
}

std::vector<std::vector<Frac>> farey_tree(unsigned levels, bool sorted) {
    std::vector<std::vector<Frac>> tree;
    if (levels == 0) return tree;
    tree.push_back({Frac{1, 2}});
    for (unsigned k = 2; k <= levels; ++k) {
        const auto& prev = tree.back();
        std::vector<Frac> next;
        next.reserve(prev.size() * 2);
        for (const Frac& x : prev) {
            next.push_back(farey_child(x, 1));
            next.push_back(farey_child(x, 0));
        }
        tree.push_back(std::move(next));
    }
    if (sorted)
        for (auto& level : tree) std::sort(level.begin(), level.end());
    return tree;
}

IntMat phi_matrix(int branch) {
    if (branch == 0) return IntMat(2, {Int(0), Int(1), Int(1), Int(1)});
    if (branch == 1) return IntMat(2, {Int(1), Int(0), Int(1), Int(1)});
    throw std::invalid_argument("phi_matrix: branch must be 0 or 1");
}

IntMat farey_branch_matrix(int branch) {
    if (branch == 0) return IntMat(2, {Int(-1), Int(1), Int(1), Int(0)});
    if (branch == 1) return IntMat(2, {Int(1), Int(0), Int(-1), Int(1)});
    throw std::invalid_argument("farey_branch_matrix: branch must be 0 or 1");
}

IntMat matrix_of(const Frac& x) {
    BinaryWord w = binary_sequence(x);
    IntMat m = IntMat::identity(2);
    for (char c : w) m = m * phi_matrix(c == '0' ? 0 : 1);
    // det of the word product is (-1)^#zeros; append the branch matrix that
    // makes the total +1.
    IntMat out = m * phi_matrix(m.det() == 1 ? 1 : 0);
    return out;
}

Frac word_to_fraction(const BinaryWord& w) {
    IntMat m = IntMat::identity(2);
    for (char c : w) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word_to_fraction: word must be over {0,1}");
        m = m * phi_matrix(c == '0' ? 0 : 1);
    }
    std::vector<Int> v = m.apply({Int(1), Int(2)});
    return Frac::make(v[0], v[1]);
}

}  // namespace partdyn
