#include "views.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "counting.hpp"
#include "farey.hpp"
#include "jsonio.hpp"
#include "text.hpp"

namespace partdyn {

namespace {

// Field/value tables and column grids share one pretty printer: first column
// right-aligned when numeric-ish, the rest left-aligned, two-space gutter.
std::string render_grid(const std::vector<std::vector<std::string>>& grid, Format f,
                        bool right_align_first) {
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
    std::size_t cols = 0;
    for (const auto& row : grid) cols = std::max(cols, row.size());
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            if (c == 0 && right_align_first)
                line += std::string(width[c] - row[c].size(), ' ') + row[c];
            else
                line += row[c] + std::string(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string join_fracs(const std::vector<std::pair<Int, Int>>& pq, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pq.size(); ++i) {
        if (i) os << sep;
        os << pq[i].first << '/' << pq[i].second;
    }
    return os.str();
}

}  // namespace

nlohmann::ordered_json cf_to_json(const Frac& x) {
    CFExpansion cf = cf_expand(x);
    ConvergentList conv = convergents(cf);
    nlohmann::ordered_json j;
    j["fraction"] = x.str();
    j["digits"] = ints_to_json(cf.digits);
    j["depth"] = int_to_json(depth_from_cf(cf));
    j["mirror"] = mirror(cf).str();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [p, q] : conv.pq) arr.push_back(p.str() + "/" + q.str());
    j["convergents"] = std::move(arr);
    return j;
}

std::string render_cf(const Frac& x, Format f) {
    if (f == Format::json) return cf_to_json(x).dump(2) + "\n";
    CFExpansion cf = cf_expand(x);
    ConvergentList conv = convergents(cf);
    const char* sep = f == Format::csv ? ";" : ",";
    std::vector<std::vector<std::string>> grid;
    if (f != Format::pretty) grid.push_back({"field", "value"});
    grid.push_back({"fraction", x.str()});
    grid.push_back({"digits", join_ints(cf.digits, sep)});
    grid.push_back({"depth", depth_from_cf(cf).str()});
    grid.push_back({"mirror", mirror(cf).str()});
    grid.push_back({"convergents", join_fracs(conv.pq, f == Format::pretty ? " " : sep)});
    return render_grid(grid, f, false);
}

nlohmann::ordered_json tree_to_json(unsigned levels, bool sorted) {
    nlohmann::ordered_json j;
    j["levels"] = levels;
    j["sorted"] = sorted;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    std::vector<std::vector<Frac>> tree = farey_tree(levels, sorted);
    for (std::size_t k = 0; k < tree.size(); ++k) {
        nlohmann::ordered_json level;
        level["level"] = k + 1;
        nlohmann::ordered_json fr = nlohmann::ordered_json::array();
        for (const Frac& x : tree[k]) fr.push_back(x.str());
        level["fractions"] = std::move(fr);
        arr.push_back(std::move(level));
    }
    j["tree"] = std::move(arr);
    return j;
}

std::string render_tree(unsigned levels, bool sorted, Format f) {
    if (levels > 22) throw std::domain_error("tree: more than 22 levels will not fit");
    if (f == Format::json) return tree_to_json(levels, sorted).dump(2) + "\n";
    std::vector<std::vector<Frac>> tree = farey_tree(levels, sorted);
    std::vector<std::vector<std::string>> grid;
    if (f == Format::pretty) {
        for (std::size_t k = 0; k < tree.size(); ++k) {
            std::ostringstream os;
            for (std::size_t i = 0; i < tree[k].size(); ++i) {
                if (i) os << ' ';
                os << tree[k][i].str();
            }
            grid.push_back({std::to_string(k + 1), os.str()});
        }
        return render_grid(grid, f, true);
    }
    grid.push_back({"level", "fraction"});
    for (std::size_t k = 0; k < tree.size(); ++k)
        for (const Frac& x : tree[k]) grid.push_back({std::to_string(k + 1), x.str()});
    return render_grid(grid, f, false);
}

namespace {

struct CountPlan {
    bool formula = false, kim = false, brute = false, coprime = false;
    bool agree_column() const {
        return (int(formula) + int(kim) + int(brute)) >= 2;
    }
};

CountPlan count_plan(const std::vector<std::string>& methods) {
    CountPlan plan;
    for (const std::string& m : methods) {
        if (m == "formula")
            plan.formula = true;
        else if (m == "kim")
            plan.kim = true;
        else if (m == "brute")
            plan.brute = true;
        else if (m == "coprime")
            plan.coprime = true;
        else
            throw std::invalid_argument("count: unknown method '" + m +
                                        "' (formula, kim, brute, coprime)");
    }
    if (!plan.formula && !plan.kim && !plan.brute && !plan.coprime)
        throw std::invalid_argument("count: no methods selected");
    return plan;
}

void check_count_range(const Int& lo, const Int& hi) {
    if (lo < 2) throw std::domain_error("count: requires n >= 2");
    if (hi < lo) throw std::domain_error("count: empty range");
    if (hi - lo > 100000) throw std::domain_error("count: range too wide");
}

}  // namespace

nlohmann::ordered_json count_to_json(const Int& lo, const Int& hi,
                                     const std::vector<std::string>& methods) {
    CountPlan plan = count_plan(methods);
    check_count_range(lo, hi);
    nlohmann::ordered_json j;
    j["lo"] = int_to_json(lo);
    j["hi"] = int_to_json(hi);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Int n = lo; n <= hi; ++n) {
        nlohmann::ordered_json row;
        row["n"] = int_to_json(n);
        std::vector<Int> p2s;
        if (plan.formula) {
            p2s.push_back(p2_formula(n));
            row["p2_formula"] = int_to_json(p2s.back());
        }
        if (plan.kim) {
            p2s.push_back(p2_kim(n));
            row["p2_kim"] = int_to_json(p2s.back());
        }
        if (plan.brute) {
            p2s.push_back(p2_brute(n));
            row["p2_brute"] = int_to_json(p2s.back());
        }
        if (plan.coprime) row["pF2"] = int_to_json(pF2(n));
        if (plan.agree_column())
            row["agree"] = std::all_of(p2s.begin(), p2s.end(),
                                       [&](const Int& v) { return v == p2s[0]; });
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string render_count(const Int& lo, const Int& hi,
                         const std::vector<std::string>& methods, Format f) {
    if (f == Format::json) return count_to_json(lo, hi, methods).dump(2) + "\n";
    CountPlan plan = count_plan(methods);
    check_count_range(lo, hi);
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"n"};
    if (plan.formula) head.push_back("p2_formula");
    if (plan.kim) head.push_back("p2_kim");
    if (plan.brute) head.push_back("p2_brute");
    if (plan.coprime) head.push_back("pF2");
    if (plan.agree_column()) head.push_back("agree");
    grid.push_back(std::move(head));
    for (Int n = lo; n <= hi; ++n) {
        std::vector<std::string> row{n.str()};
        std::vector<Int> p2s;
        if (plan.formula) {
            p2s.push_back(p2_formula(n));
            row.push_back(p2s.back().str());
        }
        if (plan.kim) {
            p2s.push_back(p2_kim(n));
            row.push_back(p2s.back().str());
        }
        if (plan.brute) {
            p2s.push_back(p2_brute(n));
            row.push_back(p2s.back().str());
        }
        if (plan.coprime) row.push_back(pF2(n).str());
        if (plan.agree_column())
            row.push_back(std::all_of(p2s.begin(), p2s.end(),
                                      [&](const Int& v) { return v == p2s[0]; })
                              ? "true"
                              : "false");
        grid.push_back(std::move(row));
    }
    return render_grid(grid, f, true);
}

std::string young_ascii(const Partition& p) {
    if (p.weight() > 10000) throw std::domain_error("shape: partition too large to draw");
    std::ostringstream os;
    for (const Int& row : p.young_rows())
        os << std::string(row.convert_to<std::size_t>(), '#') << '\n';
    return os.str();
}

nlohmann::ordered_json conjugate_to_json(const Partition& p, bool with_shape) {
    Partition c = p.conjugate();
    auto side = [&](const Partition& q) {
        nlohmann::ordered_json j;
        j["compact"] = q.compact();
        j["parts"] = ints_to_json(q.parts());
        j["mults"] = ints_to_json(q.mults());
        return j;
    };
    nlohmann::ordered_json j;
    j["input"] = side(p);
    j["conjugate"] = side(c);
    if (with_shape) {
        auto rows = [&](const Partition& q) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            std::istringstream is(young_ascii(q));
            for (std::string line; std::getline(is, line);) arr.push_back(line);
            return arr;
        };
        j["input_shape"] = rows(p);
        j["conjugate_shape"] = rows(c);
    }
    return j;
}

std::string render_conjugate(const Partition& p, bool with_shape, Format f) {
    if (f == Format::json) return conjugate_to_json(p, with_shape).dump(2) + "\n";
    Partition c = p.conjugate();
    if (f == Format::pretty) {
        std::vector<std::vector<std::string>> grid{{"input", p.compact()},
                                                   {"conjugate", c.compact()}};
        std::string out = render_grid(grid, f, false);
        if (with_shape) {
            out += "\ninput shape:\n" + young_ascii(p);
            out += "\nconjugate shape:\n" + young_ascii(c);
        }
        return out;
    }
    const char* sep = f == Format::csv ? ";" : ",";
    std::vector<std::vector<std::string>> grid{{"field", "value"},
                                               {"input", p.compact()},
                                               {"input_parts", join_ints(p.parts(), sep)},
                                               {"input_mults", join_ints(p.mults(), sep)},
                                               {"conjugate", c.compact()},
                                               {"conjugate_parts", join_ints(c.parts(), sep)},
                                               {"conjugate_mults", join_ints(c.mults(), sep)}};
    if (with_shape) {
        auto bar = [&](const Partition& q) {
            std::string s = young_ascii(q);
            std::string out;
            for (char ch : s) out += ch == '\n' ? '|' : ch;
            if (!out.empty() && out.back() == '|') out.pop_back();
            return out;
        };
        grid.push_back({"input_shape", bar(p)});
        grid.push_back({"conjugate_shape", bar(c)});
    }
    return render_grid(grid, f, false);
}

}  // namespace partdyn
