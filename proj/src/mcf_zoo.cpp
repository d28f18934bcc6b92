#include "mcf_zoo.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "jsonio.hpp"

namespace partdyn {

namespace {

std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s;
}

void require_cone(const std::vector<Int>& parts, int dim, const char* who) {
    if (static_cast<int>(parts.size()) != dim)
        throw std::domain_error(std::string(who) + ": expected " +
                                std::to_string(dim) + " parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::domain_error(std::string(who) + ": parts must be positive");
        if (i + 1 < parts.size() && parts[i] <= parts[i + 1])
            throw std::domain_error(std::string(who) +
                                    ": parts must be strictly decreasing");
    }
}

bool in_cone(const std::vector<Int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i + 1 < parts.size() && parts[i] <= parts[i + 1]) return false;
    }
    return true;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMat mat_from_json(const nlohmann::json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim)
        throw std::invalid_argument("MapDef json: matrix must have dim rows");
    std::vector<Int> entries;
    entries.reserve(dim * dim);
    for (const auto& row : j) {
        std::vector<Int> r = ints_from_json(row);
        if (r.size() != dim)
            throw std::invalid_argument("MapDef json: matrix row length != dim");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return IntMat(dim, std::move(entries));
}

nlohmann::ordered_json mat_to_json(const IntMat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(int_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

void validate_mapdef(const MapDef& def) {
    if (def.name.empty()) throw std::domain_error("MapDef: empty name");
    if (def.dim < 2) throw std::domain_error("MapDef: dim must be >= 2");
    if (def.branches.empty()) throw std::domain_error("MapDef: no branches");
    const std::size_t d = static_cast<std::size_t>(def.dim);
    const IntMat id = IntMat::identity(d);
    for (const ZooBranch& b : def.branches) {
        if (b.label.empty())
            throw std::domain_error("MapDef: branch with empty label");
        if (b.pred.size() != d)
            throw std::domain_error("MapDef: predicate length != dim in branch " +
                                    b.label);
        if (b.parts_mat.dim() != d || b.mults_mat.dim() != d)
            throw std::domain_error("MapDef: matrix dimension != dim in branch " +
                                    b.label);
        // B^T A = I forces (B k).(A n) = k.n: the step conserves weight.
        if (!(b.mults_mat.transposed() * b.parts_mat == id))
            throw std::domain_error("MapDef: branch " + b.label +
                                    " does not conserve weight (B^T A != I)");
    }
}

MapDef mapdef_triangle(int m) {
    if (m < 2) throw std::domain_error("mapdef_triangle: m must be >= 2");
    const std::size_t d = static_cast<std::size_t>(m);

    // Branch 0 applies where n2 + nm > n1, branch 1 where n2 + nm < n1;
    // n1 = n2 + nm is the dividing boundary (the dimension-drop locus).
    std::vector<Int> pred0(d, 0), pred1(d, 0);
    pred0[0] = -1;
    pred0[1] += 1;
    pred0[d - 1] += 1;
    pred1[0] = 1;
    pred1[1] -= 1;
    pred1[d - 1] -= 1;

    // T0: (n2,...,nm, n1-n2) x [k1+k2, k3,...,km, k1].
    IntMat a0(d), b0(d);
    for (std::size_t i = 0; i + 1 < d; ++i) a0.at(i, i + 1) = 1;
    a0.at(d - 1, 0) = 1;
    a0.at(d - 1, 1) = -1;
    b0.at(0, 0) = 1;
    b0.at(0, 1) = 1;
    for (std::size_t i = 1; i + 1 < d; ++i) b0.at(i, i + 1) = 1;
    b0.at(d - 1, 0) = 1;

    // T1: (n1-nm, n2,...,nm) x [k1,...,k_{m-1}, k1+km].
    IntMat a1(d), b1(d);
    a1.at(0, 0) = 1;
    a1.at(0, d - 1) = -1;
    for (std::size_t i = 1; i < d; ++i) a1.at(i, i) = 1;
    for (std::size_t i = 0; i + 1 < d; ++i) b1.at(i, i) = 1;
    b1.at(d - 1, 0) = 1;
    b1.at(d - 1, d - 1) += 1;

    MapDef def;
    def.name = "triangle";
    def.dim = m;
    def.branches = {{"0", std::move(pred0), std::move(a0), std::move(b0)},
                    {"1", std::move(pred1), std::move(a1), std::move(b1)}};
    validate_mapdef(def);
    return def;
}

MapDef mapdef_monkemeyer() {
    MapDef def;
    def.name = "monkemeyer";
    def.dim = 3;
    // Branch 0 (n2+n3 > n1): (n2, n1-n3, n2-n3) x [k1+k2+k3, k1, -k1-k3].
    // Branch 1 (n2+n3 < n1): (n1-n3, n2, n2-n3) x [k1, k1+k2+k3, -k1-k3].
    def.branches = {
        {"0",
         {-1, 1, 1},
         IntMat(3, {0, 1, 0, 1, 0, -1, 0, 1, -1}),
         IntMat(3, {1, 1, 1, 1, 0, 0, -1, 0, -1})},
        {"1",
         {1, -1, -1},
         IntMat(3, {1, 0, -1, 0, 1, 0, 0, 1, -1}),
         IntMat(3, {1, 0, 0, 1, 1, 1, -1, 0, -1})},
    };
    validate_mapdef(def);
    return def;
}

MapDef mapdef_cassaigne() {
    MapDef def;
    def.name = "cassaigne";
    def.dim = 3;
    // Branch 0 (n2+n3 > n1): (n2, n3, n2+n3-n1) x [k1+k2, k1+k3, -k1].
    // Branch 1: same as the Monkemeyer branch 1.
    def.branches = {
        {"0",
         {-1, 1, 1},
         IntMat(3, {0, 1, 0, 0, 0, 1, -1, 1, 1}),
         IntMat(3, {1, 1, 0, 1, 0, 1, -1, 0, 0})},
        {"1",
         {1, -1, -1},
         IntMat(3, {1, 0, -1, 0, 1, 0, 0, 1, -1}),
         IntMat(3, {1, 0, 0, 1, 1, 1, -1, 0, -1})},
    };
    validate_mapdef(def);
    return def;
}

MapDef mapdef_t12e12() {
    MapDef def;
    def.name = "t12e12";
    def.dim = 3;
    // Branch 0 (2*n3 > n2): (n1+n3-n2, n3, n2-n3) x [k1, k2+k3, k1+k2].
    // Branch 1 (2*n3 < n2): (n1-n3, n2-n3, n3) x [k1, k2, k1+k2+k3].
    // Both multiplicity matrices are nonnegative, so partitions map to
    // partitions; 2*n3 = n2 is the boundary.
    def.branches = {
        {"0",
         {0, -1, 2},
         IntMat(3, {1, -1, 1, 0, 0, 1, 0, 1, -1}),
         IntMat(3, {1, 0, 0, 0, 1, 1, 1, 1, 0})},
        {"1",
         {0, 1, -2},
         IntMat(3, {1, 0, -1, 0, 1, -1, 0, 0, 1}),
         IntMat(3, {1, 0, 0, 0, 1, 0, 1, 1, 1})},
    };
    validate_mapdef(def);
    return def;
}

MapDef mapdef_twin(const MapDef& base, const std::string& name) {
    if (base.branches.size() != 2)
        throw std::domain_error("mapdef_twin: base must have exactly two branches");
    MapDef def;
    def.name = name;
    def.dim = base.dim;
    def.branches = {base.branches[1], base.branches[0]};
    def.branches[0].label = "0";
    def.branches[1].label = "1";
    validate_mapdef(def);
    return def;
}

MapDef mapdef_t13_12_12() { return mapdef_twin(mapdef_triangle(3), "t13_12_12"); }

MapDef mapdef_t132_12_e() { return mapdef_twin(mapdef_t12e12(), "t132_12_e"); }

MapDef mapdef_builtin(const std::string& name, int m) {
    if (name == "triangle") return mapdef_triangle(m);
    static const std::map<std::string, MapDef (*)()> three_dim{
        {"monkemeyer", mapdef_monkemeyer}, {"cassaigne", mapdef_cassaigne},
        {"t12e12", mapdef_t12e12},         {"t13_12_12", mapdef_t13_12_12},
        {"t132_12_e", mapdef_t132_12_e}};
    auto it = three_dim.find(name);
    if (it == three_dim.end())
        throw std::domain_error("mapdef_builtin: unknown map '" + name + "'");
    if (m != 3)
        throw std::domain_error("mapdef_builtin: " + name +
                                " is defined for m = 3 only");
    return it->second();
}

MapDef mapdef_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("MapDef json: expected an object");
    MapDef def;
    def.name = j.at("name").get<std::string>();
    def.dim = j.at("dim").get<int>();
    if (def.dim < 2 || def.dim > 64)
        throw std::invalid_argument("MapDef json: dim out of range");
    const std::size_t d = static_cast<std::size_t>(def.dim);
    for (const auto& bj : j.at("branches")) {
        ZooBranch b;
        b.label = bj.at("label").get<std::string>();
        b.pred = ints_from_json(bj.at("pred"));
        b.parts_mat = mat_from_json(bj.at("parts"), d);
        b.mults_mat = mat_from_json(bj.at("mults"), d);
        def.branches.push_back(std::move(b));
    }
    validate_mapdef(def);
    return def;
}

nlohmann::ordered_json mapdef_to_json(const MapDef& def) {
    nlohmann::ordered_json j;
    j["name"] = def.name;
    j["dim"] = def.dim;
    nlohmann::ordered_json branches = nlohmann::ordered_json::array();
    for (const ZooBranch& b : def.branches) {
        nlohmann::ordered_json bj;
        bj["label"] = b.label;
        bj["pred"] = ints_to_json(b.pred);
        bj["parts"] = mat_to_json(b.parts_mat);
        bj["mults"] = mat_to_json(b.mults_mat);
        branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);
    return j;
}

MapDef mapdef_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    return mapdef_from_json(nlohmann::json::parse(in));
}

Int SignedState::weight() const {
    Int w = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) w += parts[i] * mults[i];
    return w;
}

bool SignedState::any_negative_mult() const {
    return std::any_of(mults.begin(), mults.end(),
                       [](const Int& k) { return k < 0; });
}

std::string SignedState::str() const {
    return "(" + join_ints(parts) + ")x[" + join_ints(mults) + "]";
}

SignedState signed_state_of(const Partition& p) { return {p.parts(), p.mults()}; }

ZooStepResult zoo_step(const MapDef& def, const SignedState& s) {
    require_cone(s.parts, def.dim, "zoo_step");
    if (s.mults.size() != s.parts.size())
        throw std::domain_error("zoo_step: parts/mults length mismatch");
    for (std::size_t bi = 0; bi < def.branches.size(); ++bi) {
        const ZooBranch& b = def.branches[bi];
        if (dot(b.pred, s.parts) > 0) {
            ZooStepResult r;
            r.kind = ZooStepKind::applied;
            r.branch = static_cast<int>(bi);
            r.state = {b.parts_mat.apply(s.parts), b.mults_mat.apply(s.mults)};
            r.negative = r.state.any_negative_mult();
            return r;
        }
    }
    return {};
}

SignedState zoo_apply_branch(const MapDef& def, int branch, const SignedState& s) {
    if (branch < 0 || branch >= static_cast<int>(def.branches.size()))
        throw std::domain_error("zoo_apply_branch: no such branch");
    if (s.parts.size() != static_cast<std::size_t>(def.dim) ||
        s.mults.size() != s.parts.size())
        throw std::domain_error("zoo_apply_branch: state size != dim");
    const ZooBranch& b = def.branches[static_cast<std::size_t>(branch)];
    return {b.parts_mat.apply(s.parts), b.mults_mat.apply(s.mults)};
}

namespace {

ZooStepResult named_signed_step(const MapDef& def, const Partition& p,
                                const char* who, const char* boundary_msg) {
    ZooStepResult r = zoo_step(def, signed_state_of(p));
    if (r.kind == ZooStepKind::boundary)
        throw std::domain_error(std::string(who) + ": " + boundary_msg);
    return r;
}

}  // namespace

ZooStepResult monkemeyer_step(const Partition& p) {
    static const MapDef def = mapdef_monkemeyer();
    return named_signed_step(def, p, "monkemeyer_step", "n2 + n3 = n1 lies on the boundary");
}

ZooStepResult cassaigne_step(const Partition& p) {
    static const MapDef def = mapdef_cassaigne();
    return named_signed_step(def, p, "cassaigne_step", "n2 + n3 = n1 lies on the boundary");
}

ZooPartitionStep t12e12_step(const Partition& p) {
    static const MapDef def = mapdef_t12e12();
    ZooStepResult r =
        named_signed_step(def, p, "t12e12_step", "2*n3 = n2 lies on the boundary");
    return {r.branch, Partition::make(r.state.parts, r.state.mults)};
}

ZooPartitionStep twin_step(const std::string& which, const Partition& p) {
    static const MapDef t13 = mapdef_t13_12_12();
    static const MapDef t132 = mapdef_t132_12_e();
    const MapDef* def = nullptr;
    if (which == "t13_12_12")
        def = &t13;
    else if (which == "t132_12_e")
        def = &t132;
    else
        throw std::domain_error("twin_step: unknown twin '" + which + "'");
    ZooStepResult r =
        named_signed_step(*def, p, "twin_step", "input lies on the boundary");
    return {r.branch, Partition::make(r.state.parts, r.state.mults)};
}

ZooOrbit zoo_orbit(const MapDef& def, const SignedState& root,
                   std::size_t max_steps) {
    require_cone(root.parts, def.dim, "zoo_orbit");
    if (root.mults.size() != root.parts.size())
        throw std::domain_error("zoo_orbit: parts/mults length mismatch");
    ZooOrbit orbit;
    orbit.root = root;
    SignedState cur = root;
    for (std::size_t i = 0; i < max_steps; ++i) {
        ZooStepResult r = zoo_step(def, cur);
        if (r.kind == ZooStepKind::boundary) {
            orbit.end = ZooOrbitEnd::boundary;
            return orbit;
        }
        orbit.steps.push_back({r.branch, r.state});
        if (r.negative) {
            orbit.end = ZooOrbitEnd::negative;
            return orbit;
        }
        if (!in_cone(r.state.parts)) {
            orbit.end = ZooOrbitEnd::left_cone;
            return orbit;
        }
        cur = std::move(r.state);
    }
    throw std::runtime_error("zoo_orbit: exceeded step limit");
}

namespace {

struct BranchI64 {
    std::string label;
    std::vector<std::int64_t> pred, parts_mat, mults_mat;  // matrices row major
};

std::int64_t entry_to_i64(const Int& v, std::int64_t& max_abs) {
    if (v < -(Int(1) << 20) || v > (Int(1) << 20))
        throw std::domain_error("classify: matrix entries too large");
    std::int64_t e = v.convert_to<std::int64_t>();
    max_abs = std::max(max_abs, e < 0 ? -e : e);
    return e;
}

std::vector<Int> to_ints(const std::vector<std::int64_t>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

ClassifierVerdict classify(const MapDef& def, int m, std::int64_t weight_bound) {
    validate_mapdef(def);
    if (def.dim != m) throw std::domain_error("classify: map dimension != m");
    if (m < 2 || m > 16) throw std::domain_error("classify: m out of range");
    if (weight_bound < m || weight_bound > 1000000)
        throw std::domain_error("classify: weight_bound out of range");

    const std::size_t d = static_cast<std::size_t>(m);

    // The sweep runs in 64-bit arithmetic: every state it keeps walking from
    // has positive parts and nonnegative multiplicities, so multiplicities are
    // bounded by the conserved weight; part growth is capped explicitly.
    std::int64_t max_abs_entry = 1;
    std::vector<BranchI64> branches;
    for (const ZooBranch& b : def.branches) {
        BranchI64 bi;
        bi.label = b.label;
        for (const Int& v : b.pred) bi.pred.push_back(entry_to_i64(v, max_abs_entry));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                bi.parts_mat.push_back(entry_to_i64(b.parts_mat.at(r, c), max_abs_entry));
                bi.mults_mat.push_back(entry_to_i64(b.mults_mat.at(r, c), max_abs_entry));
            }
        branches.push_back(std::move(bi));
    }
    // |sum of d products| <= d * max_entry * VALUE_CAP < 2^63.
    constexpr std::int64_t VALUE_CAP = std::int64_t{1} << 38;

    ClassifierVerdict verdict;
    verdict.map_name = def.name;
    verdict.dim = m;
    verdict.weight_bound = weight_bound;

    const bool packable_dim = 2 * d <= 8;
    std::unordered_set<std::uint64_t> seen_packed;
    std::unordered_set<std::string> seen_wide;

    std::vector<std::int64_t> parts(d), mults(d), nparts(d), nmults(d);

    auto first_visit = [&](const std::vector<std::int64_t>& n,
                           const std::vector<std::int64_t>& k) -> bool {
        if (packable_dim) {
            std::uint64_t key = 0;
            std::size_t idx = 0;
            bool fits = true;
            for (const auto* vec : {&n, &k}) {
                for (std::int64_t v : *vec) {
                    if (v < 0 || v > 255) {
                        fits = false;
                        break;
                    }
                    key |= static_cast<std::uint64_t>(v) << (8 * idx++);
                }
                if (!fits) break;
            }
            if (fits) return seen_packed.insert(key).second;
        }
        std::string key(2 * d * sizeof(std::int64_t), '\0');
        std::memcpy(key.data(), n.data(), d * sizeof(std::int64_t));
        std::memcpy(key.data() + d * sizeof(std::int64_t), k.data(),
                    d * sizeof(std::int64_t));
        return seen_wide.insert(key).second;
    };

    // Walks one root's orbit; true means a counterexample ended the sweep.
    auto walk = [&](const std::vector<std::int64_t>& root) -> bool {
        ++verdict.roots;
        std::copy(root.begin(), root.end(), parts.begin());
        std::fill(mults.begin(), mults.end(), std::int64_t{0});
        mults[0] = 1;
        while (true) {
            if (!first_visit(parts, mults)) return false;  // orbit joins a seen one
            if (++verdict.states > 50000000)
                throw std::runtime_error("classify: state budget exceeded");

            int bi = -1;
            for (std::size_t i = 0; i < branches.size(); ++i) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < d; ++j) s += branches[i].pred[j] * parts[j];
                if (s > 0) {
                    bi = static_cast<int>(i);
                    break;
                }
            }
            if (bi < 0) return false;  // boundary

            const BranchI64& b = branches[static_cast<std::size_t>(bi)];
            bool negative = false;
            for (std::size_t i = 0; i < d; ++i) {
                std::int64_t pn = 0, pk = 0;
                for (std::size_t j = 0; j < d; ++j) {
                    pn += b.parts_mat[i * d + j] * parts[j];
                    pk += b.mults_mat[i * d + j] * mults[j];
                }
                if (pn < -VALUE_CAP || pn > VALUE_CAP || pk < -VALUE_CAP || pk > VALUE_CAP)
                    throw std::runtime_error("classify: state values exceed supported range");
                nparts[i] = pn;
                nmults[i] = pk;
                if (pk < 0) negative = true;
            }
            if (negative) {
                verdict.partition_safe = false;
                verdict.counterexample = ZooCounterexample{
                    SignedState{to_ints(parts), to_ints(mults)}, b.label,
                    SignedState{to_ints(nparts), to_ints(nmults)}};
                return true;
            }
            bool cone = true;
            for (std::size_t i = 0; i < d; ++i)
                if (nparts[i] < 1 || (i + 1 < d && nparts[i] <= nparts[i + 1])) {
                    cone = false;
                    break;
                }
            if (!cone) return false;  // image left the cone; orbit ends
            parts.swap(nparts);
            mults.swap(nmults);
        }
    };

    // Roots (n1,...,nm) x [1,0,...,0], weight n1 ascending, then the remaining
    // parts lexicographically ascending; the first counterexample in this
    // order is the stored one.
    std::vector<std::int64_t> root(d);
    std::function<bool(std::size_t)> gen = [&](std::size_t pos) -> bool {
        if (pos == d) return walk(root);
        for (std::int64_t v = static_cast<std::int64_t>(d - pos); v < root[pos - 1]; ++v) {
            root[pos] = v;
            if (gen(pos + 1)) return true;
        }
        return false;
    };
    for (std::int64_t n1 = m; n1 <= weight_bound; ++n1) {
        root[0] = n1;
        if (gen(1)) break;
    }
    return verdict;
}

nlohmann::ordered_json verdict_to_json(const ClassifierVerdict& v) {
    nlohmann::ordered_json j;
    j["map"] = v.map_name;
    j["dim"] = v.dim;
    j["weight_bound"] = v.weight_bound;
    j["partition_safe"] = v.partition_safe;
    j["roots"] = v.roots;
    j["states"] = v.states;
    if (v.counterexample) {
        const ZooCounterexample& c = *v.counterexample;
        nlohmann::ordered_json cj;
        cj["input_parts"] = ints_to_json(c.input.parts);
        cj["input_mults"] = ints_to_json(c.input.mults);
        cj["branch"] = c.branch_label;
        cj["output_parts"] = ints_to_json(c.output.parts);
        cj["output_mults"] = ints_to_json(c.output.mults);
        j["counterexample"] = std::move(cj);
    }
    return j;
}

ConjugationFailure t12e12_conjugation_failure(const Int& weight_limit) {
    static const MapDef def = mapdef_t12e12();
    // Smallest partition with three distinct parts is (3,2,1), weight 6.
    for (Int n = 6; n <= weight_limit; ++n) {
        std::optional<ConjugationFailure> found;
        for_each_partition(n, 3, [&](const Partition& p) -> bool {
            const std::vector<Int>& parts = p.parts();
            if (2 * parts[2] == parts[1]) return true;  // on the boundary; skip
            ZooPartitionStep step = t12e12_step(p);
            Partition expected = p.conjugate();
            Partition cmu = step.state.conjugate();
            if (cmu.m() != 3) {
                found = ConjugationFailure{p,        step.branch, step.state,
                                           expected, true,        std::nullopt};
                return false;
            }
            ZooStepResult back = zoo_step(def, signed_state_of(cmu));
            if (back.kind == ZooStepKind::boundary) {
                found = ConjugationFailure{p,        step.branch, step.state,
                                           expected, true,        std::nullopt};
                return false;
            }
            Partition actual = Partition::make(back.state.parts, back.state.mults);
            if (!actual.same_partition(expected)) {
                found = ConjugationFailure{p,        step.branch, step.state,
                                           expected, false,       actual};
                return false;
            }
            return true;
        });
        if (found) return *found;
    }
    throw std::logic_error("t12e12_conjugation_failure: no failure below limit");
}

}  // namespace partdyn
