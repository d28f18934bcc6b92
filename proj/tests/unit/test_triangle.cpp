#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "triangle.hpp"

using namespace partdyn;

namespace {

Partition part(std::vector<int> ns, std::vector<int> ks) {
    std::vector<Int> p(ns.begin(), ns.end()), m(ks.begin(), ks.end());
    return Partition::make(std::move(p), std::move(m));
}

std::string orbit_word(const TriOrbit& o) {
    std::string w;
    for (const auto& st : o.steps) w += st.branch;
    return w;
}

}  // namespace

TEST_CASE("cone point map") {
    TriPointStep s = tri_point_step({11, 9, 4});
    CHECK(s.branch == 0);
    CHECK(s.image == std::vector<Int>{9, 4, 2});
    s = tri_point_step({7, 4, 2});
    CHECK(s.branch == 1);
    CHECK(s.image == std::vector<Int>{5, 4, 2});
    // Two coordinates: the homogeneous interval map.
    s = tri_point_step({19, 8});
    CHECK(s.branch == 1);
    CHECK(s.image == std::vector<Int>{11, 8});
    CHECK_THROWS(tri_point_step({3, 2, 1}));  // dividing plane
    CHECK_THROWS(tri_point_step({4, 4, 1}));
    CHECK_THROWS(tri_point_step({4, 2, 0}));
    CHECK_THROWS(tri_point_step({4}));
}

TEST_CASE("cone point orbit of (11,9,4)") {
    std::vector<Int> x{11, 9, 4};
    const std::vector<int> branches = {0, 1, 1, 0, 1};
    const std::vector<std::vector<Int>> images = {
        {9, 4, 2}, {7, 4, 2}, {5, 4, 2}, {4, 2, 1}, {3, 2, 1}};
    for (std::size_t j = 0; j < branches.size(); ++j) {
        TriPointStep s = tri_point_step(x);
        CHECK(s.branch == branches[j]);
        CHECK(s.image == images[j]);
        x = s.image;
    }
    CHECK_THROWS(tri_point_step(x));
}

TEST_CASE("partition step branches") {
    TriStepResult s = tri_step(part({11, 9, 4}, {1, 0, 0}));
    CHECK(s.branch == '0');
    CHECK(s.state.parts() == std::vector<Int>{9, 4, 2});
    CHECK(s.state.mults() == std::vector<Int>{1, 0, 1});
    CHECK(!s.terminal);

    s = tri_step(part({9, 4, 2}, {1, 0, 1}));
    CHECK(s.branch == '1');
    CHECK(s.state.parts() == std::vector<Int>{7, 4, 2});
    CHECK(s.state.mults() == std::vector<Int>{1, 0, 2});

    s = tri_step(part({5, 4, 2}, {1, 0, 3}));
    CHECK(s.branch == '0');
    CHECK(s.state.parts() == std::vector<Int>{4, 2, 1});
    CHECK(s.state.mults() == std::vector<Int>{1, 3, 1});

    // Dividing plane: the dimension drops and end multiplicities fold in.
    s = tri_step(part({3, 2, 1}, {1, 1, 1}));
    CHECK(s.branch == 'D');
    CHECK(s.state.parts() == std::vector<Int>{2, 1});
    CHECK(s.state.mults() == std::vector<Int>{2, 2});

    // Two parts fall back to the two-part step.
    s = tri_step(part({19, 8}, {1, 0}));
    CHECK(s.branch == '1');
    CHECK(s.state.compact() == "(11,8)");

    CHECK_THROWS(tri_step(Partition::make({Int(6)}, {Int(1)})));
}

TEST_CASE("weight is conserved") {
    Partition p = part({14, 7, 6, 5}, {1, 0, 0, 0});
    while (p.m() >= 2) {
        TriStepResult s = tri_step(p);
        CHECK(s.state.weight() == 14);
        if (s.terminal) break;
        p = s.state;
    }
}

TEST_CASE("orbit of (11,9,4)x[1,0,0]") {
    TriOrbit orb = tri_orbit(part({11, 9, 4}, {1, 0, 0}));
    REQUIRE(orb.steps.size() == 7);
    CHECK(orbit_word(orb) == "01101D0");
    const std::vector<std::vector<Int>> parts = {
        {9, 4, 2}, {7, 4, 2}, {5, 4, 2}, {4, 2, 1}, {3, 2, 1}, {2, 1}, {1, 1}};
    const std::vector<std::vector<Int>> mults = {
        {1, 0, 1}, {1, 0, 2}, {1, 0, 3}, {1, 3, 1}, {1, 3, 2}, {4, 3}, {7, 4}};
    for (std::size_t j = 0; j < 7; ++j) {
        CHECK(orb.steps[j].raw_parts == parts[j]);
        CHECK(orb.steps[j].raw_mults == mults[j]);
        CHECK(orb.steps[j].terminal == (j == 6));
    }
}

TEST_CASE("orbit of (14,7,6,5)x[1,0,0,0]") {
    TriOrbit orb = tri_orbit(part({14, 7, 6, 5}, {1, 0, 0, 0}));
    REQUIRE(orb.steps.size() == 8);
    CHECK(orbit_word(orb) == "100D11D0");
    const std::vector<std::vector<Int>> parts = {
        {9, 7, 6, 5}, {7, 6, 5, 2}, {6, 5, 2, 1}, {5, 2, 1}, {4, 2, 1}, {3, 2, 1}, {2, 1}, {1, 1}};
    const std::vector<std::vector<Int>> mults = {
        {1, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}, {2, 1, 2}, {2, 1, 4}, {2, 1, 6}, {3, 8}, {11, 3}};
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(orb.steps[j].raw_parts == parts[j]);
        CHECK(orb.steps[j].raw_mults == mults[j]);
    }
    CHECK(orb.steps.back().terminal);
}

TEST_CASE("orbit of a terminal root is empty") {
    CHECK(tri_orbit(Partition::make({Int(6)}, {Int(1)})).steps.empty());
    TriOrbit orb = tri_orbit(part({3, 2, 1}, {1, 1, 1}));
    REQUIRE(orb.steps.size() == 2);
    CHECK(orbit_word(orb) == "D0");
    CHECK(orb.steps[1].raw_parts == std::vector<Int>{1, 1});
    CHECK(orb.steps[1].raw_mults == std::vector<Int>{4, 2});
}

TEST_CASE("forced branches merge at the dividing plane") {
    Partition p = part({3, 2, 1}, {1, 3, 2});
    Partition a = tri_apply_branch(0, p);
    Partition b = tri_apply_branch(1, p);
    CHECK(a.same_partition(b));
    CHECK(a.parts() == std::vector<Int>{2, 1});
    CHECK(a.mults() == std::vector<Int>{4, 3});
    CHECK(a.same_partition(tri_step(p).state));

    CHECK(tri_apply_branch(1, part({9, 4, 2}, {1, 0, 1})).same_partition(part({7, 4, 2}, {1, 0, 2})));
    CHECK_THROWS(tri_apply_branch(0, part({9, 4, 2}, {1, 0, 1})));  // needs n2+nm >= n1
    CHECK_THROWS(tri_apply_branch(1, part({5, 4, 2}, {1, 0, 3})));  // needs n2+nm <= n1
    CHECK_THROWS(tri_apply_branch(2, part({5, 4, 2}, {1, 0, 3})));
}

TEST_CASE("inverse branch sections, frozen") {
    CHECK(tri_inv_1(part({5, 4, 2}, {1, 0, 2})).same_partition(part({7, 4, 2}, {1, 0, 1})));
    CHECK_THROWS(tri_inv_1(part({9, 7, 6, 5}, {1, 0, 0, 1})));  // needs k_1 < k_m

    CHECK(tri_inv_0(part({9, 4, 2}, {1, 0, 1})).same_partition(part({11, 9, 4}, {1, 0, 0})));
    CHECK_THROWS(tri_inv_0(part({9, 4, 2}, {1, 1, 0})));  // needs k_m >= 1
    CHECK_THROWS(tri_inv_0(part({9, 4, 2}, {1, 0, 2})));  // needs k_1 >= k_m

    // Two-part form of branch 0.
    CHECK(tri_inv_0(part({11, 8}, {1, 1})).same_partition(part({19, 11}, {1, 0})));
}

TEST_CASE("dividing-plane inverses") {
    Partition p = part({2, 1}, {2, 2});
    REQUIRE(tri_inv_d_count(p) == 2);
    Partition q1 = tri_inv_d(p, 1);
    CHECK(q1.same_partition(part({3, 2, 1}, {1, 1, 1})));
    Partition q2 = tri_inv_d(p, 2);
    CHECK(q2.parts() == std::vector<Int>{3, 2, 1});
    CHECK(q2.mults() == std::vector<Int>{2, 0, 0});
    for (const Partition& q : {q1, q2}) {
        TriStepResult s = tri_step(q);
        CHECK(s.branch == 'D');
        CHECK(s.state.same_partition(p));
    }
    CHECK_THROWS(tri_inv_d(p, 0));
    CHECK_THROWS(tri_inv_d(p, 3));
    CHECK(tri_inv_d_count(part({5, 2}, {1, 0})) == 0);
}

TEST_CASE("inverse branches are sections, sweep") {
    // All partitions of 18: whichever inverse applies must step back to p.
    for (const Partition& p : enumerate_partitions(18)) {
        if (p.m() < 2) continue;
        const auto& k = p.mults();
        if (k.back() >= 1 && k[0] >= k.back()) {
            TriStepResult s = tri_step(tri_inv_0(p));
            CHECK(s.branch == '0');
            CHECK(s.state.same_partition(p));
        }
        if (k[0] < k.back()) {
            TriStepResult s = tri_step(tri_inv_1(p));
            CHECK(s.branch == '1');
            CHECK(s.state.same_partition(p));
        }
        for (Int kk = 1; kk <= tri_inv_d_count(p); ++kk) {
            TriStepResult s = tri_step(tri_inv_d(p, kk));
            CHECK(s.branch == 'D');
            CHECK(s.state.same_partition(p));
        }
    }
}

TEST_CASE("restricted orbit stops at the dividing plane") {
    std::vector<TriExactState> orb = allowable_orbit({11, 9, 4});
    REQUIRE(orb.size() == 6);
    const std::vector<std::vector<Int>> mults = {
        {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}, {1, 3, 1}, {1, 3, 2}};
    for (std::size_t j = 0; j < 6; ++j) CHECK(orb[j].mults == mults[j]);
    CHECK(orb.back().parts == std::vector<Int>{3, 2, 1});
    CHECK(orb.front().parts == std::vector<Int>{11, 9, 4});
    CHECK_THROWS(allowable_orbit({9, 4}));
    CHECK_THROWS(allowable_orbit({9, 9, 4}));
}

TEST_CASE("restricted multiplicity vectors") {
    std::set<std::vector<Int>> vecs = allowable_search(3, 30);
    CHECK(vecs.count({1, 0, 0}));
    CHECK(vecs.count({1, 0, 1}));
    CHECK(vecs.count({1, 3, 2}));
    CHECK(!vecs.count({2, 1, 2}));
    for (const auto& v : vecs) CHECK(v[0] >= 1);
}

TEST_CASE("restricted sweep is consistent") {
    std::size_t states = 0, edges = 0, roots = 0;
    AllowableSweepStats st = allowable_sweep(
        3, 15,
        [&](const TriRawState& s, bool is_root) {
            ++states;
            if (is_root) ++roots;
            CHECK(s.parts[0] > s.parts[1]);
            CHECK(s.parts[1] > s.parts[2]);
            CHECK(s.parts[2] >= 1);
            CHECK(s.mults[0] >= 1);
        },
        [&](const TriRawState& a, const TriRawState& b) {
            ++edges;
            CHECK(a.parts[0] + a.parts[1] + a.parts[2] >= b.parts[0] + b.parts[1] + b.parts[2]);
        });
    CHECK(st.states == states);
    CHECK(st.edges == edges);
    CHECK(roots <= st.roots);
    CHECK(st.roots > 0);
    CHECK_THROWS(allowable_sweep(2, 15, nullptr, nullptr));
    CHECK_THROWS(allowable_sweep(3, 5, nullptr, nullptr));
}
