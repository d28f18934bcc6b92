#include "doctest.h"
#include "farey.hpp"

using namespace partdyn;

TEST_CASE("interval map steps") {
    FareyStepResult s = farey_step(Frac::make(8, 19));
    CHECK(s.branch == 1);
    CHECK(s.image == Frac::make(8, 11));
    CHECK(!s.terminal);
    s = farey_step(Frac::make(3, 5));
    CHECK(s.branch == 0);
    CHECK(s.image == Frac::make(2, 3));
    s = farey_step(Frac::make(1, 2));
    CHECK(s.terminal);
    CHECK(s.image == Frac::make(1, 1));
    CHECK_THROWS(farey_step(Frac::make(1, 1)));
}

TEST_CASE("inverse branches") {
    CHECK(farey_child(Frac::make(1, 2), 0) == Frac::make(2, 3));
    CHECK(farey_child(Frac::make(1, 2), 1) == Frac::make(1, 3));
    CHECK(farey_child(Frac::make(2, 3), 1) == Frac::make(2, 5));
    for (Int q = 2; q <= 30; ++q)
        for (Int p = 1; p < q; ++p) {
            if (checked_gcd(p, q) != 1) continue;
            Frac x = Frac::make(p, q);
            for (int b : {0, 1}) {
                FareyStepResult back = farey_step(farey_child(x, b));
                CHECK(back.branch == b);
                CHECK(back.image == x);
            }
        }
}

TEST_CASE("branch words") {
    CHECK(binary_sequence(Frac::make(2, 5)) == "10");
    CHECK(binary_sequence(Frac::make(8, 19)) == "10100");
    CHECK(extended_binary_sequence(Frac::make(8, 19)) == "101001");
    CHECK(binary_sequence(Frac::make(1, 2)).empty());
    CHECK(word_to_fraction("11") == Frac::make(1, 4));
    CHECK(word_to_fraction("10100") == Frac::make(8, 19));
    CHECK(word_to_fraction("") == Frac::make(1, 2));
}

TEST_CASE("depth") {
    CHECK(depth(Frac::make(8, 19)) == 6);
    CHECK(depth(Int(10), Int(15)) == 2);  // reduces to 2/3
    CHECK(depth(Int(3), Int(8)) == 4);
    CHECK(depth(Frac::make(1, 2)) == 1);
    CHECK(depth(Frac::make(1, 1)) == 0);
    CHECK(depth_from_cf(cf_expand(Frac::make(8, 19))) == 6);
}

TEST_CASE("tree levels") {
    auto tree = farey_tree(4, true);
    REQUIRE(tree.size() == 4);
    CHECK(tree[0] == std::vector<Frac>{Frac::make(1, 2)});
    CHECK(tree[1] == std::vector<Frac>{Frac::make(1, 3), Frac::make(2, 3)});
    CHECK(tree[2] == std::vector<Frac>{Frac::make(1, 4), Frac::make(2, 5),
                                       Frac::make(3, 5), Frac::make(3, 4)});
    auto unsorted = farey_tree(3, false);
    CHECK(unsorted[2] == std::vector<Frac>{Frac::make(1, 4), Frac::make(3, 4),
                                           Frac::make(2, 5), Frac::make(3, 5)});
    CHECK(farey_tree(0, false).empty());
}

TEST_CASE("each tree level holds exactly the fractions of its depth") {
    auto tree = farey_tree(12, false);
    std::size_t total = 0;
    for (std::size_t k = 0; k < tree.size(); ++k) {
        CHECK(tree[k].size() == std::size_t(1) << k);
        total += tree[k].size();
        for (const Frac& x : tree[k]) CHECK(depth(x) == k + 1);
    }
    CHECK(total == (std::size_t(1) << 12) - 1);
}

TEST_CASE("branch matrices") {
    CHECK(phi_matrix(0) == IntMat(2, {0, 1, 1, 1}));
    CHECK(phi_matrix(1) == IntMat(2, {1, 0, 1, 1}));
    CHECK(phi_matrix(0).det() == -1);
    CHECK(phi_matrix(1).det() == 1);
    CHECK(phi_matrix(0) * phi_matrix(0) == IntMat(2, {1, 1, 1, 2}));
    // forward branches invert the inverse branches
    for (int b : {0, 1}) {
        IntMat prod = farey_branch_matrix(b) * phi_matrix(b);
        CHECK(prod == IntMat::identity(2));
    }
}

TEST_CASE("matrix_of") {
    CHECK(matrix_of(Frac::make(8, 19)) == IntMat(2, {3, 5, 7, 12}));
    CHECK(matrix_of(Frac::make(2, 5)) == IntMat(2, {1, 1, 2, 3}));
    CHECK(matrix_of(Frac::make(1, 2)) == phi_matrix(1));
}

TEST_CASE("matrix_of columns are the tree parents") {
    for (Int q = 2; q <= 60; ++q)
        for (Int p = 1; p < q; ++p) {
            if (checked_gcd(p, q) != 1) continue;
            IntMat m = matrix_of(Frac::make(p, q));
            CHECK(m.det() == 1);
            // columns (p',q'), (p'',q''): mediant recovers p/q
            CHECK(m.at(0, 0) + m.at(0, 1) == p);
            CHECK(m.at(1, 0) + m.at(1, 1) == q);
            CHECK(m.at(0, 0) >= 1);
            CHECK(m.at(0, 0) <= m.at(1, 0));
            CHECK(m.at(0, 1) >= 0);
            CHECK(m.at(0, 1) < m.at(1, 1));
        }
}
