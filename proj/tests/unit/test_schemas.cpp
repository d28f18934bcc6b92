// Every JSON output is validated against the schema shipped in schemas/.
// A small validator covers the subset of JSON Schema those files use:
// $ref into $defs, type, properties, required, additionalProperties,
// items, and pattern.

#include <algorithm>
#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"
#include "mcf_zoo.hpp"
#include "orbit.hpp"
#include "verify.hpp"
#include "views.hpp"

using namespace partdyn;

namespace {

nlohmann::json load_schema(const std::string& name) {
    std::ifstream f(std::string(PARTDYN_SOURCE_ROOT) + "/schemas/" + name);
    REQUIRE(f);
    return nlohmann::json::parse(f);
}

const nlohmann::json& resolve(const nlohmann::json& schema, const nlohmann::json& root) {
    if (!schema.contains("$ref")) return schema;
    const std::string ref = schema["$ref"].get<std::string>();
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    return root.at("$defs").at(ref.substr(8));
}

bool type_ok(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
}

void validate(const nlohmann::json& v, const nlohmann::json& schema_in,
              const nlohmann::json& root, const std::string& at) {
    const nlohmann::json& schema = resolve(schema_in, root);
    INFO("at ", at);
    if (schema.contains("type")) {
        const nlohmann::json& t = schema["type"];
        bool ok = t.is_array() ? std::any_of(t.begin(), t.end(),
                                             [&](const nlohmann::json& one) {
                                                 return type_ok(v, one.get<std::string>());
                                             })
                               : type_ok(v, t.get<std::string>());
        CHECK(ok);
        if (!ok) return;
    }
    if (schema.contains("pattern") && v.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        CHECK(std::regex_match(v.get<std::string>(), re));
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const nlohmann::json& k : schema["required"]) {
                INFO("missing key ", k.get<std::string>());
                CHECK(v.contains(k.get<std::string>()));
            }
        const nlohmann::json props = schema.value("properties", nlohmann::json::object());
        const bool closed = schema.value("additionalProperties", nlohmann::json(true)) ==
                            nlohmann::json(false);
        for (const auto& [key, val] : v.items()) {
            if (props.contains(key)) {
                validate(val, props[key], root, at + "." + key);
            } else {
                INFO("unexpected key ", key);
                CHECK(!closed);
            }
        }
    }
    if (v.is_array() && schema.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
            validate(v[i], schema["items"], root, at + "[" + std::to_string(i) + "]");
}

void conforms(const std::string& rendered, const std::string& schema_name) {
    nlohmann::json schema = load_schema(schema_name);
    validate(nlohmann::json::parse(rendered), schema, schema, schema_name);
}

}  // namespace

TEST_CASE("expansion reports conform to their schema") {
    conforms(render_cf(Frac::parse("8/19"), Format::json), "cf.schema.json");
    // q beyond 64 bits: integers render as decimal strings
    conforms(render_cf(Frac::parse("1/1180591620717411303424"), Format::json),
             "cf.schema.json");
}

TEST_CASE("tree listings conform to their schema") {
    conforms(render_tree(4, true, Format::json), "tree.schema.json");
    conforms(render_tree(1, false, Format::json), "tree.schema.json");
}

TEST_CASE("orbit tables conform to their schema") {
    auto render = [](const char* map, std::vector<Int> parts, std::vector<Int> mults) {
        return render_orbit(run_orbit(map, Partition::make(parts, mults)), Format::json);
    };
    conforms(render("farey", {19, 8}, {1, 0}), "orbit.schema.json");
    conforms(render("triangle", {11, 9, 4}, {1, 0, 0}), "orbit.schema.json");
    conforms(render("monkemeyer", {11, 9, 4}, {1, 0, 0}), "orbit.schema.json");
    conforms(render("t12e12", {11, 9, 4}, {1, 0, 0}), "orbit.schema.json");
}

TEST_CASE("count tables conform to their schema") {
    conforms(render_count(11, 12, {"formula", "kim", "brute", "coprime"}, Format::json),
             "count.schema.json");
    conforms(render_count(2, 2, {"coprime"}, Format::json), "count.schema.json");
}

TEST_CASE("conjugation reports conform to their schema") {
    conforms(render_conjugate(Partition::make({2, 1}, {1, 2}), true, Format::json),
             "conjugate.schema.json");
    conforms(render_conjugate(Partition::make({5, 3, 2}, {3, 2, 1}), false, Format::json),
             "conjugate.schema.json");
}

TEST_CASE("generation grids conform to their schema") {
    conforms(render_generations(11, Format::json), "generations.schema.json");
    conforms(render_generations(2, Format::json), "generations.schema.json");
}

TEST_CASE("verification reports conform to their schema") {
    conforms(render_report(run_suite("zoo", 10), Format::json), "verify.schema.json");
    conforms(render_report(run_suite("palindrome", 8), Format::json), "verify.schema.json");
}

TEST_CASE("map definitions conform to their schema and round-trip") {
    for (const char* name : {"triangle", "monkemeyer", "cassaigne", "t12e12", "t13_12_12",
                             "t132_12_e"})
        conforms(mapdef_to_json(mapdef_builtin(name, 3)).dump(), "mapdef.schema.json");

    std::ifstream f(std::string(PARTDYN_SOURCE_ROOT) + "/data/maps/monkemeyer.json");
    REQUIRE(f);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    conforms(text, "mapdef.schema.json");
    nlohmann::ordered_json shipped = nlohmann::ordered_json::parse(text);
    CHECK(mapdef_to_json(mapdef_from_json(shipped)) == shipped);
}
