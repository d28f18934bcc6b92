#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcf_zoo.hpp"
#include "partitions.hpp"

namespace partdyn {

enum class Format { json, csv, tsv, pretty };

Format parse_format(const std::string& name);  // "json"|"csv"|"tsv"|"pretty"

// One generation of an orbit: the raw (unmerged) state plus the branch
// applied AT this state. The final row carries an end marker instead:
// "terminal" (single repeated part), "boundary" (no branch applies),
// "NEGATIVE" (a multiplicity went negative), or "left-cone".
struct OrbitRow {
    std::int64_t a = 0;
    std::vector<Int> parts, mults;
    std::string branch;
};

struct OrbitTable {
    std::string map;
    std::vector<OrbitRow> rows;  // rows[0] is the root state
};

// Normalized coordinates of a state, "(n2/n1, ..., nm/n1)" without reduction
// ("-" for a single part). Display-only; golden comparisons rest on the
// partition columns.
std::string point_display(const std::vector<Int>& parts);

OrbitTable orbit_farey(const Partition& root);     // one or two distinct parts
OrbitTable orbit_triangle(const Partition& root);  // any m >= 1
OrbitTable orbit_zoo(const MapDef& def, const Partition& root);

// Dispatch on a builtin map name: "farey", "triangle", or a zoo map
// ("t12e12", "monkemeyer", "cassaigne", "t13_12_12", "t132_12_e").
OrbitTable run_orbit(const std::string& map_name, const Partition& root);

// Columns a, point, parts, mults, branch. TSV tab-separates with parts and
// mults comma-joined; CSV semicolon-joins the multi-value cells; pretty pads
// columns for reading.
std::string render_orbit(const OrbitTable& t, Format f);

// {"map", "root": {"parts", "mults", "branch"}, "steps": [{"m", "branch",
// "parts", "mults"}]} — each row keeps the branch applied at itself, so the
// last step holds the end marker.
nlohmann::ordered_json orbit_to_json(const OrbitTable& t);

// Grid of the proper generations of every reduced r/n with 2r <= n: column
// r, row m holds generation m in compact form, blank after the orbit ends.
std::string render_generations(const Int& n, Format f);
nlohmann::ordered_json generations_to_json(const Int& n);

}  // namespace partdyn
