#pragma once

#include <vector>

#include "json.hpp"
#include "numerics.hpp"

namespace partdyn {

// Integers serialize as JSON numbers when they fit in 64 bits and as decimal
// strings otherwise; parsing accepts both forms.
nlohmann::ordered_json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::ordered_json ints_to_json(const std::vector<Int>& v);
std::vector<Int> ints_from_json(const nlohmann::json& j);

}  // namespace partdyn
