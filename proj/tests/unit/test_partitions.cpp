#include "doctest.h"
#include "partitions.hpp"

using namespace partdyn;

namespace {
Partition P(std::vector<Int> parts, std::vector<Int> mults) {
    return Partition::make(std::move(parts), std::move(mults));
}
}  // namespace

TEST_CASE("make validates, canonicalize repairs") {
    CHECK_THROWS(P({3, 3}, {1, 1}));     // parts must strictly decrease
    CHECK_THROWS(P({3, 5}, {1, 1}));     // descending order required
    CHECK_THROWS(P({3, 0}, {1, 1}));     // positive parts
    CHECK_THROWS(P({3, 2}, {1, -1}));    // nonnegative multiplicities
    CHECK_THROWS(P({3, 2}, {0, 1}));     // leading multiplicity >= 1
    CHECK_THROWS(P({3, 2}, {1}));        // equal lengths
    CHECK(Partition::canonicalize({3, 3, 2}, {1, 2, 5}) == P({3, 2}, {3, 5}));
    CHECK(Partition::canonicalize({2, 3}, {5, 3}) == P({3, 2}, {3, 5}));
    CHECK(Partition::canonicalize({5, 3}, {0, 2}) == P({3}, {2}));
    CHECK(Partition::canonicalize({1, 1}, {12, 7}) == P({1}, {19}));
    // zero multiplicities stay once the head is positive
    CHECK(Partition::canonicalize({19, 8}, {1, 0}) == P({19, 8}, {1, 0}));
}

TEST_CASE("weight and cleaning") {
    CHECK(P({19, 8}, {1, 0}).weight() == 19);
    CHECK(P({5, 3, 2}, {3, 2, 1}).weight() == 23);
    CHECK(P({19, 8}, {1, 0}).cleaned() == P({19}, {1}));
    CHECK(P({19, 8}, {1, 0}).same_partition(P({19}, {1})));
    CHECK(!P({19, 8}, {1, 1}).same_partition(P({19}, {1})));
}

TEST_CASE("compact form") {
    CHECK(P({5, 3, 2}, {3, 2, 1}).compact() == "(5^3,3^2,2)");
    CHECK(P({19, 8}, {1, 0}).compact() == "(19)");
    CHECK(P({1}, {19}).compact() == "(1^19)");
}

TEST_CASE("conjugate examples") {
    CHECK(P({5, 3, 2}, {3, 2, 1}).conjugate() == P({6, 5, 3}, {2, 1, 2}));
    CHECK(P({4, 3, 1}, {1, 1, 1}).conjugate() == P({3, 2, 1}, {1, 2, 1}));
    CHECK(P({3, 2, 1}, {1, 1, 3}).conjugate() == P({5, 2, 1}, {1, 1, 1}));
    CHECK(P({7}, {1}).conjugate() == P({1}, {7}));
    // proper two-part states: (n1,n2)x[k1,k2] -> (k1+k2,k1)x[n2,n1-n2]
    CHECK(P({5, 3}, {2, 3}).conjugate() == P({5, 2}, {3, 2}));
    CHECK(P({11, 8}, {1, 1}).conjugate() == P({2, 1}, {8, 3}));
    // zero multiplicities are dropped before transposing
    CHECK(P({19, 8}, {1, 0}).conjugate() == P({1}, {19}));
}

TEST_CASE("young rows") {
    CHECK(P({2, 1}, {1, 2}).young_rows() == std::vector<Int>{2, 1, 1});
    CHECK(P({5, 3, 2}, {3, 2, 1}).young_rows() ==
          std::vector<Int>{5, 5, 5, 3, 3, 2});
}

TEST_CASE("conjugation is an involution") {
    for (Int n = 1; n <= 18; ++n)
        for_each_partition(n, std::nullopt, [&](const Partition& p) {
            Partition c = p.conjugate();
            CHECK(c.weight() == n);
            CHECK(c.conjugate().same_partition(p));
            return true;
        });
}

TEST_CASE("enumeration order and counts") {
    std::vector<std::string> sixes;
    for_each_partition(6, std::nullopt, [&](const Partition& p) {
        sixes.push_back(p.compact());
        return true;
    });
    REQUIRE(sixes.size() == 11);
    CHECK(sixes.front() == "(6)");
    CHECK(sixes[1] == "(5,1)");
    CHECK(sixes.back() == "(1^6)");
    CHECK(enumerate_partitions(6).size() == 11);
    CHECK(enumerate_partitions(6, 2).size() == 6);

    for (Int n = 1; n <= 28; ++n) {
        Int count = 0;
        for_each_partition(n, std::nullopt, [&](const Partition&) {
            ++count;
            return true;
        });
        CHECK(count == count_partitions_dp(n));
    }

    // early stop
    int seen = 0;
    for_each_partition(10, std::nullopt, [&](const Partition&) {
        return ++seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("distinct filter") {
    for_each_partition(12, 2, [&](const Partition& p) {
        CHECK(p.m() == 2);
        CHECK(p.weight() == 12);
        return true;
    });
    CHECK(enumerate_partitions(2, 2).empty());
}
