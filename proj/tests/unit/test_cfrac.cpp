#include "doctest.h"
#include "cfrac.hpp"

using namespace partdyn;

namespace {
std::vector<Int> digits(const Int& p, const Int& q) {
    return cf_expand(Frac::make(p, q)).digits;
}
}  // namespace

TEST_CASE("Frac validation and parsing") {
    CHECK(Frac::make(8, 19) == Frac::make(16, 38));
    CHECK(Frac::parse("8/19") == Frac::make(8, 19));
    CHECK(Frac::make(3, 3) == Frac::make(1, 1));
    CHECK(Frac::make(8, 19).str() == "8/19");
    CHECK_THROWS(Frac::make(0, 5));
    CHECK_THROWS(Frac::make(19, 8));
    CHECK_THROWS(Frac::make(-1, 5));
    CHECK_THROWS(Frac::parse("19"));
    CHECK_THROWS(Frac::parse("a/b"));
    CHECK(Frac::make(1, 3) < Frac::make(2, 5));
}

TEST_CASE("canonical digit lists") {
    CHECK(digits(8, 19) == std::vector<Int>{2, 2, 1, 2});
    CHECK(digits(3, 8) == std::vector<Int>{2, 1, 2});
    CHECK(digits(15, 19) == std::vector<Int>{1, 3, 1, 3});
    CHECK(digits(14, 19) == std::vector<Int>{1, 2, 1, 4});
    CHECK(digits(1, 2) == std::vector<Int>{2});
    CHECK(digits(1, 1) == std::vector<Int>{1});
    // trailing 1 folds into the predecessor
    CHECK(CFExpansion::make({2, 2, 2, 1}).digits == std::vector<Int>{2, 2, 3});
    CHECK(CFExpansion::make({1}).digits == std::vector<Int>{1});
    CHECK_THROWS(CFExpansion::make({2, 0, 2}));
}

TEST_CASE("convergents of 8/19") {
    ConvergentList c = convergents(cf_expand(Frac::make(8, 19)));
    std::vector<std::pair<Int, Int>> want{{0, 1}, {1, 2}, {2, 5}, {3, 7}, {8, 19}};
    CHECK(c.pq == want);
}

TEST_CASE("convergents fold the trailing digit") {
    ConvergentList c = convergents(CFExpansion::make({1, 2}));
    CHECK(c.pq.back() == std::pair<Int, Int>{2, 3});
}

TEST_CASE("neighboring convergents have unit determinant") {
    for (Int q = 2; q <= 40; ++q)
        for (Int p = 1; p < q; ++p) {
            if (checked_gcd(p, q) != 1) continue;
            ConvergentList c = convergents(cf_expand(Frac::make(p, q)));
            Int sign = 1;  // (-1)^(j-1) for j = 1, 2, ...
            for (std::size_t j = 1; j < c.pq.size(); ++j) {
                CHECK(c.pq[j].first * c.pq[j - 1].second -
                          c.pq[j - 1].first * c.pq[j].second ==
                      sign);
                sign = -sign;
            }
        }
}

TEST_CASE("cf_value inverts cf_expand") {
    for (Int q = 1; q <= 60; ++q)
        for (Int p = 1; p <= q; ++p) {
            if (checked_gcd(p, q) != 1) continue;
            Frac x = Frac::make(p, q);
            CHECK(cf_value(cf_expand(x)) == x);
        }
}

TEST_CASE("mirror of 8/19") {
    CHECK(mirror(cf_expand(Frac::make(8, 19))) == Frac::make(7, 19));
    // reversed digits evaluate to the mirror
    CHECK(cf_value(CFExpansion::make({2, 1, 2, 2})) == Frac::make(7, 19));
}

TEST_CASE("mirror keeps the denominator and involutes below one half") {
    for (Int q = 2; q <= 200; ++q)
        for (Int p = 1; 2 * p <= q; ++p) {
            if (checked_gcd(p, q) != 1) continue;
            Frac m = mirror(cf_expand(Frac::make(p, q)));
            CHECK(m.q == q);
            CHECK(2 * m.p <= q);
            CHECK(mirror(cf_expand(m)) == Frac::make(p, q));
        }
}
