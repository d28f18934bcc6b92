#include <string>
#include <vector>

#include "doctest.h"
#include "orbit.hpp"

using namespace partdyn;

namespace {

Partition part(std::vector<int> ns, std::vector<int> ks) {
    std::vector<Int> p(ns.begin(), ns.end()), m(ks.begin(), ks.end());
    return Partition::make(std::move(p), std::move(m));
}

}  // namespace

TEST_CASE("format parsing") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("tsv") == Format::tsv);
    CHECK(parse_format("pretty") == Format::pretty);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("point display") {
    CHECK(point_display({Int(19), Int(8)}) == "(8/19)");
    CHECK(point_display({Int(11), Int(9), Int(4)}) == "(9/11, 4/11)");
    CHECK(point_display({Int(1)}) == "-");
}

TEST_CASE("two-part chain, all formats") {
    OrbitTable t = run_orbit("farey", part({19, 8}, {1, 0}));
    CHECK(t.map == "farey");
    REQUIRE(t.rows.size() == 7);
    CHECK(t.rows[0].branch == "1");
    CHECK(t.rows[6].branch == "terminal");

    CHECK(render_orbit(t, Format::tsv) ==
          "a\tpoint\tparts\tmults\tbranch\n"
          "0\t(8/19)\t19,8\t1,0\t1\n"
          "1\t(8/11)\t11,8\t1,1\t0\n"
          "2\t(3/8)\t8,3\t2,1\t1\n"
          "3\t(3/5)\t5,3\t2,3\t0\n"
          "4\t(2/3)\t3,2\t5,2\t0\n"
          "5\t(1/2)\t2,1\t7,5\t0\n"
          "6\t(1/1)\t1,1\t12,7\tterminal\n");

    CHECK(render_orbit(t, Format::csv) ==
          "a,point,parts,mults,branch\n"
          "0,(8/19),19;8,1;0,1\n"
          "1,(8/11),11;8,1;1,0\n"
          "2,(3/8),8;3,2;1,1\n"
          "3,(3/5),5;3,2;3,0\n"
          "4,(2/3),3;2,5;2,0\n"
          "5,(1/2),2;1,7;5,0\n"
          "6,(1/1),1;1,12;7,terminal\n");

    CHECK(render_orbit(t, Format::pretty) ==
          "a  point   parts  mults  branch\n"
          "0  (8/19)  19,8   1,0    1\n"
          "1  (8/11)  11,8   1,1    0\n"
          "2  (3/8)   8,3    2,1    1\n"
          "3  (3/5)   5,3    2,3    0\n"
          "4  (2/3)   3,2    5,2    0\n"
          "5  (1/2)   2,1    7,5    0\n"
          "6  (1/1)   1,1    12,7   terminal\n");

    nlohmann::ordered_json j = orbit_to_json(t);
    CHECK(j["map"] == "farey");
    CHECK(j["root"]["parts"] == nlohmann::ordered_json({19, 8}));
    CHECK(j["root"]["branch"] == "1");
    REQUIRE(j["steps"].size() == 6);
    CHECK(j["steps"][0]["m"] == 1);
    CHECK(j["steps"][0]["branch"] == "0");
    CHECK(j["steps"][5]["branch"] == "terminal");
    CHECK(j["steps"][5]["mults"] == nlohmann::ordered_json({12, 7}));
}

TEST_CASE("triangle chain with dimension drop") {
    OrbitTable t = run_orbit("triangle", part({11, 9, 4}, {1, 0, 0}));
    REQUIRE(t.rows.size() == 8);
    CHECK(render_orbit(t, Format::tsv) ==
          "a\tpoint\tparts\tmults\tbranch\n"
          "0\t(9/11, 4/11)\t11,9,4\t1,0,0\t0\n"
          "1\t(4/9, 2/9)\t9,4,2\t1,0,1\t1\n"
          "2\t(4/7, 2/7)\t7,4,2\t1,0,2\t1\n"
          "3\t(4/5, 2/5)\t5,4,2\t1,0,3\t0\n"
          "4\t(2/4, 1/4)\t4,2,1\t1,3,1\t1\n"
          "5\t(2/3, 1/3)\t3,2,1\t1,3,2\tD\n"
          "6\t(1/2)\t2,1\t4,3\t0\n"
          "7\t(1/1)\t1,1\t7,4\tterminal\n");

    // Multi-fraction points carry a comma, so CSV wraps them in quotes.
    std::string csv = render_orbit(t, Format::csv);
    CHECK(csv.find("0,\"(9/11, 4/11)\",11;9;4,1;0;0,0\n") != std::string::npos);
    CHECK(csv.find("6,(1/2),2;1,4;3,0\n") != std::string::npos);
}

TEST_CASE("zoo chains stop at their end markers") {
    OrbitTable t = run_orbit("t12e12", part({11, 9, 4}, {1, 0, 0}));
    CHECK(render_orbit(t, Format::tsv) ==
          "a\tpoint\tparts\tmults\tbranch\n"
          "0\t(9/11, 4/11)\t11,9,4\t1,0,0\t1\n"
          "1\t(5/7, 4/7)\t7,5,4\t1,0,1\t0\n"
          "2\t(4/6, 1/6)\t6,4,1\t1,1,1\t1\n"
          "3\t(3/5, 1/5)\t5,3,1\t1,1,3\t1\n"
          "4\t(2/4, 1/4)\t4,2,1\t1,1,5\tboundary\n");

    t = run_orbit("monkemeyer", part({11, 9, 4}, {1, 0, 0}));
    CHECK(render_orbit(t, Format::tsv) ==
          "a\tpoint\tparts\tmults\tbranch\n"
          "0\t(9/11, 4/11)\t11,9,4\t1,0,0\t0\n"
          "1\t(7/9, 5/9)\t9,7,5\t1,1,-1\tNEGATIVE\n");

    t = run_orbit("cassaigne", part({11, 9, 4}, {1, 0, 0}));
    CHECK(render_orbit(t, Format::tsv) ==
          "a\tpoint\tparts\tmults\tbranch\n"
          "0\t(9/11, 4/11)\t11,9,4\t1,0,0\t0\n"
          "1\t(4/9, 2/9)\t9,4,2\t1,1,-1\tNEGATIVE\n");

    CHECK_THROWS(run_orbit("nonesuch", part({11, 9, 4}, {1, 0, 0})));
}

TEST_CASE("generation grid for n = 11") {
    CHECK(render_generations(11, Format::tsv) ==
          "m\tr=1\tr=2\tr=3\tr=4\tr=5\n"
          "1\t(10,1)\t(9,2)\t(8,3)\t(7,4)\t(6,5)\n"
          "2\t(9,1^2)\t(7,2^2)\t(5,3^2)\t(4^2,3)\t(5^2,1)\n"
          "3\t(8,1^3)\t(5,2^3)\t(3^3,2)\t(3^3,1^2)\t(4^2,1^3)\n"
          "4\t(7,1^4)\t(3,2^4)\t(2^4,1^3)\t(2^3,1^5)\t(3^2,1^5)\n"
          "5\t(6,1^5)\t(2^5,1)\t\t\t(2^2,1^7)\n"
          "6\t(5,1^6)\t\t\t\t\n"
          "7\t(4,1^7)\t\t\t\t\n"
          "8\t(3,1^8)\t\t\t\t\n"
          "9\t(2,1^9)\t\t\t\t\n");

    nlohmann::ordered_json j = generations_to_json(11);
    CHECK(j["n"] == 11);
    REQUIRE(j["columns"].size() == 5);
    CHECK(j["columns"][0]["r"] == 1);
    CHECK(j["columns"][0]["generations"].size() == 9);
    CHECK(j["columns"][2]["generations"][1] == "(5,3^2)");
    CHECK(j["columns"][4]["generations"][4] == "(2^2,1^7)");
}

TEST_CASE("pretty grid trims trailing blanks") {
    std::string s = render_generations(11, Format::pretty);
    CHECK(s.find("5  (6,1^5)  (2^5,1)                        (2^2,1^7)\n") != std::string::npos);
    CHECK(s.find("6  (5,1^6)\n") != std::string::npos);
    CHECK(s.find(" \n") == std::string::npos);  // no trailing spaces on any line
}
