#include "triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "extended_farey.hpp"

namespace partdyn {

TriPointStep tri_point_step(const std::vector<Int>& x) {
    if (x.size() < 2) throw std::domain_error("tri_point_step: needs at least two coordinates");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] > x[i + 1]))
            throw std::domain_error("tri_point_step: coordinates must strictly decrease");
    if (x.back() < 1) throw std::domain_error("tri_point_step: coordinates must be positive");
    Int side = x[1] + x.back();
    TriPointStep out;
    if (side > x[0]) {
        out.branch = 0;
        out.image.assign(x.begin() + 1, x.end());
        out.image.push_back(x[0] - x[1]);
    } else if (side < x[0]) {
        out.branch = 1;
        out.image.push_back(x[0] - x.back());
        out.image.insert(out.image.end(), x.begin() + 1, x.end());
    } else {
        throw std::domain_error("tri_point_step: x_1 + x_n = x_0 lies on the dividing plane");
    }
    return out;
}

TriStepResult tri_step(const Partition& p) {
    const std::size_t m = p.m();
    if (m < 2) throw std::domain_error("tri_step: single-part state is terminal");
    const auto& n = p.parts();
    const auto& k = p.mults();
    if (m == 2) {
        EfStepResult ef = ef_step(p);
        return {ef.branch == 0 ? '0' : '1', std::move(ef.parts), std::move(ef.mults),
                ef.terminal, std::move(ef.state)};
    }
    Int side = n[1] + n[m - 1];
    char branch;
    std::vector<Int> parts, mults;
    if (side > n[0]) {
        branch = '0';
        parts.assign(n.begin() + 1, n.end());
        parts.push_back(n[0] - n[1]);
        mults.push_back(k[0] + k[1]);
        mults.insert(mults.end(), k.begin() + 2, k.end());
        mults.push_back(k[0]);
    } else if (side < n[0]) {
        branch = '1';
        parts.push_back(n[0] - n[m - 1]);
        parts.insert(parts.end(), n.begin() + 1, n.end());
        mults.assign(k.begin(), k.end() - 1);
        mults.push_back(k[0] + k[m - 1]);
    } else {
        branch = 'D';
        parts.assign(n.begin() + 1, n.end());
        mults.push_back(k[0] + k[1]);
        mults.insert(mults.end(), k.begin() + 2, k.end() - 1);
        mults.push_back(k[0] + k[m - 1]);
    }
    bool terminal = std::all_of(parts.begin(), parts.end(),
                                [&](const Int& v) { return v == parts[0]; });
    Partition state = Partition::canonicalize(parts, mults);
    return {branch, std::move(parts), std::move(mults), terminal, std::move(state)};
}

Partition tri_apply_branch(int branch, const Partition& p) {
    const std::size_t m = p.m();
    if (m < 2) throw std::domain_error("tri_apply_branch: requires m >= 2");
    if (branch != 0 && branch != 1)
        throw std::invalid_argument("tri_apply_branch: branch must be 0 or 1");
    const auto& n = p.parts();
    const auto& k = p.mults();
    Int side = n[1] + n[m - 1];  // for m = 2 this is 2*n_2, the two-part rule
    std::vector<Int> parts, mults;
    if (branch == 0) {
        if (side < n[0]) throw std::domain_error("tri_apply_branch: branch 0 needs n_2 + n_m >= n_1");
        parts.assign(n.begin() + 1, n.end());
        parts.push_back(n[0] - n[1]);
        mults.push_back(k[0] + k[1]);
        mults.insert(mults.end(), k.begin() + 2, k.end());
        mults.push_back(k[0]);
    } else {
        if (side > n[0]) throw std::domain_error("tri_apply_branch: branch 1 needs n_2 + n_m <= n_1");
        parts.push_back(n[0] - n[m - 1]);
        parts.insert(parts.end(), n.begin() + 1, n.end());
        mults.assign(k.begin(), k.end() - 1);
        mults.push_back(k[0] + k[m - 1]);
    }
    // At the dividing plane both weak branches merge into the dimension-drop
    // image, so canonicalization makes them agree there.
    return Partition::canonicalize(std::move(parts), std::move(mults));
}

TriOrbit tri_orbit(const Partition& root) {
    TriOrbit orbit{root, {}};
    Partition cur = root;
    while (true) {
        if (cur.m() < 2) break;  // root already terminal
        TriStepResult s = tri_step(cur);
        orbit.steps.push_back({s.branch, s.parts, s.mults, s.terminal});
        if (s.terminal) break;
        cur = s.state;
    }
    return orbit;
}

Partition tri_inv_0(const Partition& p) {
    const std::size_t m = p.m();
    if (m < 2) throw std::domain_error("tri_inv_0: requires m >= 2");
    const auto& n = p.parts();
    const auto& k = p.mults();
    if (k[m - 1] < 1) throw std::domain_error("tri_inv_0: requires k_m >= 1");
    if (k[0] < k[m - 1]) throw std::domain_error("tri_inv_0: requires k_1 >= k_m");
    if (m == 2) return Partition::make({n[0] + n[1], n[0]}, {k[1], k[0] - k[1]});
    std::vector<Int> parts{n[0] + n[m - 1], n[0]};
    parts.insert(parts.end(), n.begin() + 1, n.end() - 1);
    std::vector<Int> mults{k[m - 1], k[0] - k[m - 1]};
    mults.insert(mults.end(), k.begin() + 1, k.end() - 1);
    return Partition::make(std::move(parts), std::move(mults));
}

Partition tri_inv_1(const Partition& p) {
    const std::size_t m = p.m();
    if (m < 2) throw std::domain_error("tri_inv_1: requires m >= 2");
    const auto& n = p.parts();
    const auto& k = p.mults();
    if (k[0] >= k[m - 1]) throw std::domain_error("tri_inv_1: requires k_1 < k_m");
    std::vector<Int> parts{n[0] + n[m - 1]};
    parts.insert(parts.end(), n.begin() + 1, n.end());
    std::vector<Int> mults(k.begin(), k.end() - 1);
    mults.push_back(k[m - 1] - k[0]);
    return Partition::make(std::move(parts), std::move(mults));
}

Int tri_inv_d_count(const Partition& p) {
    if (p.m() < 2) return 0;
    const auto& k = p.mults();
    Int lo = k[0] < k[p.m() - 1] ? k[0] : k[p.m() - 1];
    return lo < 0 ? Int(0) : lo;
}

Partition tri_inv_d(const Partition& p, const Int& k) {
    const std::size_t m = p.m();
    if (m < 2) throw std::domain_error("tri_inv_d: requires m >= 2");
    const auto& n = p.parts();
    const auto& km = p.mults();
    if (k < 1 || k > km[0] || k > km[m - 1])
        throw std::domain_error("tri_inv_d: requires 1 <= k <= min(k_1, k_m)");
    std::vector<Int> parts{n[0] + n[m - 1]};
    parts.insert(parts.end(), n.begin(), n.end());
    std::vector<Int> mults{k, km[0] - k};
    mults.insert(mults.end(), km.begin() + 1, km.end() - 1);
    mults.push_back(km[m - 1] - k);
    return Partition::make(std::move(parts), std::move(mults));
}

namespace {

// Shared branch logic for the restricted ('0'/'1'-only) walkers.  Returns
// false at the boundary n_1 = n_2 + n_m.
template <typename I>
bool allowable_advance(std::vector<I>& n, std::vector<I>& k) {
    const std::size_t m = n.size();
    I side = n[1] + n[m - 1];
    if (side == n[0]) return false;
    if (side > n[0]) {
        I n1 = n[0], k1 = k[0];
        std::rotate(n.begin(), n.begin() + 1, n.end());
        n[m - 1] = n1 - n[0];  // n[0] now holds the old n_2
        k[1] += k1;
        std::rotate(k.begin(), k.begin() + 1, k.end());  // old k_1 lands last
    } else {
        n[0] -= n[m - 1];
        k[m - 1] += k[0];
    }
    return true;
}

}  // namespace

std::vector<TriExactState> allowable_orbit(const std::vector<Int>& root_parts) {
    const std::size_t m = root_parts.size();
    if (m < 3) throw std::domain_error("allowable_orbit: requires m >= 3 parts");
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (!(root_parts[i] > root_parts[i + 1]))
            throw std::domain_error("allowable_orbit: parts must strictly decrease");
    if (root_parts[m - 1] < 1) throw std::domain_error("allowable_orbit: parts must be positive");
    std::vector<Int> n = root_parts, k(m, 0);
    k[0] = 1;
    std::vector<TriExactState> orbit{{n, k}};
    while (allowable_advance(n, k)) orbit.push_back({n, k});
    return orbit;
}

AllowableSweepStats allowable_sweep(
    int m, std::int64_t weight_bound,
    const std::function<void(const TriRawState&, bool is_root)>& on_state,
    const std::function<void(const TriRawState&, const TriRawState&)>& on_edge) {
    if (m < 3 || m > 8) throw std::domain_error("allowable_sweep: requires 3 <= m <= 8");
    if (weight_bound < m * (m + 1) / 2 || weight_bound > 10000)
        throw std::domain_error("allowable_sweep: weight bound out of range");
    AllowableSweepStats stats;
    std::unordered_set<std::string> visited;
    auto key_of = [&](const TriRawState& s) {
        // Weight conservation bounds every entry by weight_bound <= 10000.
        std::string key;
        key.reserve(4 * s.parts.size());
        for (std::int64_t v : s.parts) {
            key.push_back(static_cast<char>(v & 0xff));
            key.push_back(static_cast<char>((v >> 8) & 0xff));
        }
        for (std::int64_t v : s.mults) {
            key.push_back(static_cast<char>(v & 0xff));
            key.push_back(static_cast<char>((v >> 8) & 0xff));
        }
        return key;
    };
    // Enumerate roots: strictly decreasing part tuples with largest part
    // (= conserved weight) at most weight_bound.
    std::vector<std::int64_t> parts(m);
    std::function<void(int, std::int64_t)> rec = [&](int idx, std::int64_t max_val) {
        if (idx == m) {
            ++stats.roots;
            TriRawState cur{parts, std::vector<std::int64_t>(m, 0)};
            cur.mults[0] = 1;
            bool is_root = true;
            while (true) {
                if (visited.insert(key_of(cur)).second) {
                    ++stats.states;
                    on_state(cur, is_root);
                } else if (!is_root) {
                    break;  // downstream already swept
                }
                is_root = false;
                TriRawState next = cur;
                if (!allowable_advance(next.parts, next.mults)) break;
                ++stats.edges;
                on_edge(cur, next);
                cur = std::move(next);
            }
            return;
        }
        for (std::int64_t v = max_val; v >= m - idx; --v) {
            parts[idx] = v;
            rec(idx + 1, v - 1);
        }
    };
    rec(0, weight_bound);
    return stats;
}

std::set<std::vector<Int>> allowable_search(int m, std::int64_t weight_bound) {
    std::set<std::vector<Int>> vectors;
    allowable_sweep(
        m, weight_bound,
        [&](const TriRawState& s, bool) {
            vectors.emplace(s.mults.begin(), s.mults.end());
        },
        [](const TriRawState&, const TriRawState&) {});
    return vectors;
}

}  // namespace partdyn
