#include "jsonio.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace partdyn {

nlohmann::ordered_json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) throw std::invalid_argument("empty string is not an integer");
        return Int(s);
    }
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

nlohmann::ordered_json ints_to_json(const std::vector<Int>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

std::vector<Int> ints_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

}  // namespace partdyn
