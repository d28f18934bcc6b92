#include "orbit.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "extended_farey.hpp"
#include "jsonio.hpp"
#include "text.hpp"
#include "triangle.hpp"

namespace partdyn {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "tsv") return Format::tsv;
    if (name == "pretty") return Format::pretty;
    throw std::invalid_argument("unknown format: " + name);
}

std::string point_display(const std::vector<Int>& parts) {
    if (parts.size() < 2) return "-";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (i > 1) os << ", ";
        os << parts[i] << "/" << parts[0];
    }
    os << ")";
    return os.str();
}

// Each walker pushes every state with a provisional end marker on the last
// row; applying a branch at a row overwrites its marker with the branch label.

OrbitTable orbit_farey(const Partition& root) {
    if (root.m() > 2)
        throw std::domain_error("orbit_farey: at most two distinct parts");
    OrbitTable t{"farey", {}};
    t.rows.push_back({0, root.parts(), root.mults(), "terminal"});
    if (root.m() < 2) return t;
    Partition cur = root;
    std::int64_t a = 0;
    while (true) {
        EfStepResult s = ef_step(cur);
        t.rows.back().branch = std::to_string(s.branch);
        ++a;
        t.rows.push_back({a, s.parts, s.mults, "terminal"});
        if (s.terminal) return t;
        cur = s.state;
    }
}

OrbitTable orbit_triangle(const Partition& root) {
    OrbitTable t{"triangle", {}};
    t.rows.push_back({0, root.parts(), root.mults(), "terminal"});
    TriOrbit o = tri_orbit(root);
    for (std::size_t j = 0; j < o.steps.size(); ++j) {
        const auto& s = o.steps[j];
        t.rows.back().branch = std::string(1, s.branch);
        t.rows.push_back(
            {static_cast<std::int64_t>(j) + 1, s.raw_parts, s.raw_mults, "terminal"});
    }
    return t;
}

OrbitTable orbit_zoo(const MapDef& def, const Partition& root) {
    SignedState s0 = signed_state_of(root);
    ZooOrbit o = zoo_orbit(def, s0);
    OrbitTable t{def.name, {}};
    t.rows.push_back({0, s0.parts, s0.mults, ""});
    for (std::size_t j = 0; j < o.steps.size(); ++j) {
        const auto& s = o.steps[j];
        t.rows.back().branch = def.branches.at(static_cast<std::size_t>(s.branch)).label;
        t.rows.push_back({static_cast<std::int64_t>(j) + 1, s.state.parts, s.state.mults, ""});
    }
    switch (o.end) {
        case ZooOrbitEnd::boundary: t.rows.back().branch = "boundary"; break;
        case ZooOrbitEnd::negative: t.rows.back().branch = "NEGATIVE"; break;
        case ZooOrbitEnd::left_cone: t.rows.back().branch = "left-cone"; break;
    }
    return t;
}

OrbitTable run_orbit(const std::string& map_name, const Partition& root) {
    if (map_name == "farey") return orbit_farey(root);
    if (map_name == "triangle") return orbit_triangle(root);
    return orbit_zoo(mapdef_builtin(map_name, static_cast<int>(root.m())), root);
}

std::string render_orbit(const OrbitTable& t, Format f) {
    if (f == Format::json) return orbit_to_json(t).dump(2) + "\n";
    std::ostringstream os;
    if (f == Format::tsv) {
        os << "a\tpoint\tparts\tmults\tbranch\n";
        for (const auto& r : t.rows)
            os << r.a << '\t' << point_display(r.parts) << '\t' << join_ints(r.parts, ",")
               << '\t' << join_ints(r.mults, ",") << '\t' << r.branch << '\n';
        return os.str();
    }
    if (f == Format::csv) {
        os << "a,point,parts,mults,branch\n";
        for (const auto& r : t.rows)
            os << r.a << ',' << csv_cell(point_display(r.parts)) << ','
               << join_ints(r.parts, ";") << ',' << join_ints(r.mults, ";") << ','
               << r.branch << '\n';
        return os.str();
    }
    std::vector<std::array<std::string, 5>> grid;
    grid.push_back({"a", "point", "parts", "mults", "branch"});
    for (const auto& r : t.rows)
        grid.push_back({std::to_string(r.a), point_display(r.parts),
                        join_ints(r.parts, ","), join_ints(r.mults, ","), r.branch});
    std::array<std::size_t, 5> width{};
    for (const auto& row : grid)
        for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < 5; ++c) {
            if (c) line += "  ";
            if (c == 0)
                line += std::string(width[c] - row[c].size(), ' ') + row[c];
            else
                line += row[c] + std::string(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

namespace {

struct GenGrid {
    std::vector<Int> rs;
    std::vector<std::vector<std::string>> cols;  // cols[i][m-1], compact cells
    std::size_t rows = 0;
};

GenGrid generation_grid(const Int& n) {
    if (n < 2) throw std::domain_error("generations: requires n >= 2");
    GenGrid g;
    for (Int r = 1; 2 * r <= n; ++r) {
        if (checked_gcd(r, n) != 1) continue;
        std::vector<std::string> col;
        for (const Partition& p : orbit_of_fraction(r, n)) col.push_back(p.compact());
        g.rows = std::max(g.rows, col.size());
        g.rs.push_back(r);
        g.cols.push_back(std::move(col));
    }
    return g;
}

}  // namespace

std::string render_generations(const Int& n, Format f) {
    if (f == Format::json) return generations_to_json(n).dump(2) + "\n";
    GenGrid g = generation_grid(n);
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"m"};
    for (const Int& r : g.rs) {
        std::ostringstream os;
        os << "r=" << r;
        head.push_back(os.str());
    }
    grid.push_back(std::move(head));
    for (std::size_t m = 1; m <= g.rows; ++m) {
        std::vector<std::string> row{std::to_string(m)};
        for (const auto& col : g.cols)
            row.push_back(m <= col.size() ? col[m - 1] : "");
        grid.push_back(std::move(row));
    }
    std::ostringstream os;
    if (f == Format::tsv || f == Format::csv) {
        const char sep = f == Format::tsv ? '\t' : ',';
        for (const auto& row : grid) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) os << sep;
                os << (f == Format::csv ? csv_cell(row[c]) : row[c]);
            }
            os << '\n';
        }
        return os.str();
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            if (c == 0)
                line += std::string(width[c] - row[c].size(), ' ') + row[c];
            else
                line += row[c] + std::string(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

nlohmann::ordered_json generations_to_json(const Int& n) {
    GenGrid g = generation_grid(n);
    nlohmann::ordered_json j;
    j["n"] = int_to_json(n);
    auto cols = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.cols.size(); ++i) {
        nlohmann::ordered_json col;
        col["r"] = int_to_json(g.rs[i]);
        col["generations"] = g.cols[i];
        cols.push_back(std::move(col));
    }
    j["columns"] = std::move(cols);
    return j;
}

nlohmann::ordered_json orbit_to_json(const OrbitTable& t) {
    nlohmann::ordered_json j;
    j["map"] = t.map;
    const OrbitRow& r0 = t.rows.at(0);
    j["root"] = {{"parts", ints_to_json(r0.parts)},
                 {"mults", ints_to_json(r0.mults)},
                 {"branch", r0.branch}};
    auto steps = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const OrbitRow& r = t.rows[i];
        steps.push_back({{"m", r.a},
                         {"branch", r.branch},
                         {"parts", ints_to_json(r.parts)},
                         {"mults", ints_to_json(r.mults)}});
    }
    j["steps"] = std::move(steps);
    return j;
}

}  // namespace partdyn
