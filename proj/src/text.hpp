#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "numerics.hpp"

namespace partdyn {

inline std::string join_ints(const std::vector<Int>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

// RFC-4180 quoting: cells containing a comma or quote are wrapped, quotes doubled.
inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

}  // namespace partdyn
