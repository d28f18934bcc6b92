#pragma once

#include <string>
#include <vector>

#include "cfrac.hpp"
#include "json.hpp"
#include "orbit.hpp"
#include "partitions.hpp"

namespace partdyn {

// Digit expansion, depth, mirror, and convergents of a fraction as one
// field/value table.
std::string render_cf(const Frac& x, Format f);
nlohmann::ordered_json cf_to_json(const Frac& x);

// Levels 1..levels of the inverse-branch tree (each level's fractions either
// in parent order or ascending).
std::string render_tree(unsigned levels, bool sorted, Format f);
nlohmann::ordered_json tree_to_json(unsigned levels, bool sorted);

// Counting table over lo..hi. Methods are a subset of
// {"formula", "kim", "brute", "coprime"}; the first three fill the
// two-distinct-part columns and "coprime" adds the gcd-restricted count.
// An agreement column appears when at least two of the first three run.
std::string render_count(const Int& lo, const Int& hi,
                         const std::vector<std::string>& methods, Format f);
nlohmann::ordered_json count_to_json(const Int& lo, const Int& hi,
                                     const std::vector<std::string>& methods);

// Conjugate report; with_shape appends both Young diagrams.
std::string render_conjugate(const Partition& p, bool with_shape, Format f);
nlohmann::ordered_json conjugate_to_json(const Partition& p, bool with_shape);

// Young diagram as '#' rows, one line per row, largest on top.
std::string young_ascii(const Partition& p);

}  // namespace partdyn
