#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "counting.hpp"
#include "extended_farey.hpp"
#include "farey.hpp"
#include "mcf_zoo.hpp"
#include "text.hpp"
#include "triangle.hpp"

namespace partdyn {

bool SuiteReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

int worker_count() {
    const char* env = std::getenv("PARTDYN_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return 1;
    return static_cast<int>(std::min(v, 256L));
}

namespace {

// Keeps the first counterexample a check sees.
void fail(CheckResult& c, const std::string& detail) {
    if (c.passed) {
        c.passed = false;
        c.detail = detail;
    }
}

void parallel_for(std::int64_t lo, std::int64_t hi,
                  const std::function<void(std::int64_t)>& fn) {
    const int w = worker_count();
    if (w <= 1 || hi - lo <= 1) {
        for (std::int64_t i = lo; i < hi; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{lo};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t)
        pool.emplace_back([&] {
            for (std::int64_t i; (i = next.fetch_add(1)) < hi;) fn(i);
        });
    for (auto& t : pool) t.join();
}

// Failure with the smallest n wins, so reports are thread-count independent.
struct MinFail {
    Int n{-1};
    std::string detail;
    void record(const Int& at, std::string d) {
        if (n < 0 || at < n) {
            n = at;
            detail = std::move(d);
        }
    }
    void apply(CheckResult& c) const {
        if (n >= 0) fail(c, detail);
    }
};

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string frac_str(const Int& r, const Int& n) {
    std::ostringstream os;
    os << r << "/" << n;
    return os.str();
}

std::vector<CheckResult> suite_palindrome(std::int64_t bound) {
    CheckResult v1{"mirrored-generations"};
    CheckResult v2{"word-reversal"};
    for (Int n = 3; n <= bound; ++n) {
        for (Int r = 1; 2 * r < n; ++r) {
            if (checked_gcd(r, n) != 1) continue;
            ++v1.cases;
            if (!palindrome_v1_check_all(r, n)) fail(v1, frac_str(r, n));
        }
        // The stepwise identity needs no coprimality or half-interval
        // restriction: fold the reversed branch word (the branches the orbit
        // actually took, ending in the canonical 0) from the terminal row.
        for (Int r = 1; r < n; ++r) {
            ++v2.cases;
            EfOrbit orb = ef_orbit(n, r, 1);
            BinaryWord w;
            for (const auto& st : orb.steps) w += static_cast<char>('0' + st.branch);
            const auto& last = orb.steps.back();
            TwoPartRaw fin{last.raw_parts[0], last.raw_parts[1], last.raw_mults[0],
                           last.raw_mults[1]};
            TwoPartRaw start{n, r, 1, 0};
            if (!(palindrome_v2_apply_raw(fin, w) == formal_conjugate(start)))
                fail(v2, frac_str(r, n));
        }
    }
    return {v1, v2};
}

std::vector<CheckResult> suite_conjugation(std::int64_t bound) {
    CheckResult inv{"conjugate-involution"};
    CheckResult young{"young-transpose"};
    const Int nmax = std::min<std::int64_t>(bound, 26);
    for (Int n = 1; n <= nmax; ++n)
        for_each_partition(n, std::nullopt, [&](const Partition& p) {
            Partition c = p.conjugate();
            ++inv.cases;
            if (!c.conjugate().same_partition(p)) fail(inv, p.compact());
            ++young.cases;
            std::vector<Int> rows = p.young_rows();
            std::vector<Int> tr;
            for (Int i = 0; !rows.empty() && i < rows.front(); ++i) {
                Int cnt = 0;
                for (const Int& r : rows) {
                    if (r <= i) break;
                    ++cnt;
                }
                tr.push_back(cnt);
            }
            if (tr != c.young_rows()) fail(young, p.compact());
            return true;
        });

    std::mt19937 rng(20260817u);
    auto random_state = [&](std::size_t m) {
        const std::int64_t maxpart = std::max<std::int64_t>(bound, 2 * m);
        std::uniform_int_distribution<std::int64_t> part(1, maxpart);
        std::uniform_int_distribution<std::int64_t> mult(1, 9);
        std::set<std::int64_t> chosen;
        while (chosen.size() < m) chosen.insert(part(rng));
        std::vector<Int> parts(chosen.rbegin(), chosen.rend());
        std::vector<Int> mults;
        for (std::size_t i = 0; i < m; ++i) mults.emplace_back(mult(rng));
        return Partition::make(std::move(parts), std::move(mults));
    };

    // conj(p) = step_i(conj(step_i(p))) on the non-boundary branches.
    CheckResult diagram{"stepwise-diagram"};
    for (std::size_t m : {3u, 4u, 5u})
        for (int it = 0; it < 2000; ++it) {
            Partition p = random_state(m);
            TriStepResult s = tri_step(p);
            if (s.branch == 'D') continue;
            ++diagram.cases;
            try {
                Partition rhs = tri_apply_branch(s.branch - '0', s.state.conjugate());
                if (!rhs.same_partition(p.conjugate())) fail(diagram, p.compact());
            } catch (const std::exception&) {
                fail(diagram, p.compact());
            }
        }

    // Composing the diagram: the conjugate of the start is the reversed
    // branch word applied to the conjugate of the end.
    CheckResult wordrev{"reversed-word-recovery"};
    for (std::size_t m : {3u, 4u, 5u})
        for (int it = 0; it < 1000; ++it) {
            Partition p = random_state(m);
            Partition cur = p;
            std::string word;
            while (true) {
                if (cur.m() < 2) break;
                TriStepResult s = tri_step(cur);
                if (s.branch == 'D' || s.terminal) break;
                word += s.branch;
                cur = s.state;
            }
            if (word.empty()) continue;
            ++wordrev.cases;
            try {
                Partition acc = cur.conjugate();
                for (auto it2 = word.rbegin(); it2 != word.rend(); ++it2)
                    acc = tri_apply_branch(*it2 - '0', acc);
                if (!acc.same_partition(p.conjugate())) fail(wordrev, p.compact());
            } catch (const std::exception&) {
                fail(wordrev, p.compact());
            }
        }

    return {inv, young, diagram, wordrev};
}

std::vector<CheckResult> suite_counting(std::int64_t bound) {
    CheckResult triple{"two-part-count-agreement"};
    CheckResult pf2b{"coprime-count-agreement"};
    CheckResult prime4{"coprime-count-matches-iff-prime-or-4"};
    triple.cases = pf2b.cases = prime4.cases = bound - 1;

    std::mutex mu;
    MinFail mf_triple, mf_pf2b, mf_prime4;
    parallel_for(2, bound + 1, [&](std::int64_t ni) {
        const Int n = ni;
        Int a = p2_formula(n), b = p2_kim(n), c = p2_brute(n);
        Int f = pF2(n), fb = pF2_brute(n);
        bool want = is_prime(n) || n == 4;
        std::ostringstream os;
        os << "n=" << n << ": " << a << "/" << b << "/" << c << ", coprime " << f;
        std::lock_guard<std::mutex> lk(mu);
        if (!(a == b && b == c)) mf_triple.record(n, os.str());
        if (f != fb) mf_pf2b.record(n, os.str() + " vs " + fb.str());
        if ((f == a) != want) mf_prime4.record(n, os.str());
    });
    mf_triple.apply(triple);
    mf_pf2b.apply(pf2b);
    mf_prime4.apply(prime4);

    CheckResult cover{"orbit-cover-partitions"};
    const Int cover_max = std::min<std::int64_t>(bound, 120);
    for (Int n = 2; n <= cover_max; ++n) {
        ++cover.cases;
        std::multiset<std::string> seen;
        for (const CoverOrbit& co : orbit_cover_decomposition(n))
            for (const Partition& p : co.members) seen.insert(p.compact());
        std::set<std::string> expect;
        for_each_partition(n, 2, [&](const Partition& p) {
            expect.insert(p.compact());
            return true;
        });
        bool dup = false;
        for (const auto& s : seen)
            if (seen.count(s) > 1) {
                dup = true;
                fail(cover, "duplicate " + s);
                break;
            }
        if (!dup && (seen.size() != expect.size() ||
                     !std::equal(expect.begin(), expect.end(), seen.begin())))
            fail(cover, "n=" + n.str() + ": cover misses or adds members");
    }

    CheckResult obt{"obtainability"};
    const Int obt_max = std::min<std::int64_t>(bound, 40);
    for (Int n = 2; n <= obt_max; ++n) {
        ++obt.cases;
        std::set<std::string> seen;
        for (Int r = 1; r < n; ++r) {
            if (checked_gcd(r, n) != 1) continue;
            for (const Partition& p : orbit_of_fraction(r, n)) seen.insert(p.compact());
        }
        for_each_partition(n, 2, [&](const Partition& p) {
            bool pred = obtainable(p.parts()[0], p.parts()[1], p.mults()[0], p.mults()[1]);
            bool got = seen.count(p.compact()) > 0;
            if (pred != got) fail(obt, p.compact());
            return true;
        });
    }

    return {triple, pf2b, prime4, cover, obt};
}

std::string raw_str(const TriRawState& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.parts.size(); ++i) os << (i ? "," : "") << s.parts[i];
    os << ")x[";
    for (std::size_t i = 0; i < s.mults.size(); ++i) os << (i ? "," : "") << s.mults[i];
    os << "]";
    return os.str();
}

std::vector<CheckResult> suite_allowable(std::int64_t bound) {
    CheckResult a{"first-mult-positive"};
    CheckResult b{"positive-mults-closed"};
    CheckResult c{"zero-second-forces-unit-first"};
    CheckResult d{"zero-last-with-positive-second-never"};
    CheckResult e{"equal-end-mults-at-most-one"};
    CheckResult u{"mult-vector-212-unreachable"};
    for (int m : {3, 4}) {
        allowable_sweep(
            m, bound,
            [&](const TriRawState& s, bool is_root) {
                ++a.cases;
                if (s.mults[0] < 1) fail(a, raw_str(s));
                ++c.cases;
                if (s.mults[1] == 0 && s.mults[0] > 1) fail(c, raw_str(s));
                if (!is_root) {
                    ++d.cases;
                    if (s.mults.back() == 0 && s.mults[1] > 0) fail(d, raw_str(s));
                }
                ++e.cases;
                if (s.mults.front() == s.mults.back() && s.mults.front() >= 2)
                    fail(e, raw_str(s));
                if (m == 3) {
                    ++u.cases;
                    if (s.mults[0] == 2 && s.mults[1] == 1 && s.mults[2] == 2)
                        fail(u, raw_str(s));
                }
            },
            [&](const TriRawState& parent, const TriRawState& child) {
                for (auto k : parent.mults)
                    if (k < 1) return;
                ++b.cases;
                for (auto k : child.mults)
                    if (k < 1) fail(b, raw_str(parent) + " -> " + raw_str(child));
            });
    }
    return {a, b, c, d, e, u};
}

std::vector<CheckResult> suite_zoo(std::int64_t bound) {
    std::vector<CheckResult> out;

    CheckResult basis{"branch-matrices-inverse-transpose"};
    std::vector<MapDef> defs{mapdef_triangle(3), mapdef_monkemeyer(),
                             mapdef_cassaigne(), mapdef_t12e12(),
                             mapdef_t13_12_12(), mapdef_t132_12_e()};
    for (const MapDef& def : defs) {
        ++basis.cases;
        try {
            validate_mapdef(def);
        } catch (const std::exception& ex) {
            fail(basis, def.name + ": " + ex.what());
        }
    }
    out.push_back(basis);

    const SignedState frozen_in{{4, 2, 1}, {1, 0, 0}};
    const SignedState frozen_out{{3, 2, 1}, {1, 1, -1}};
    auto safety = [&](const MapDef& def, bool expect_safe) {
        CheckResult c{def.name + (expect_safe ? "-safe" : "-unsafe")};
        ClassifierVerdict v = classify(def, 3, bound);
        c.cases = v.states;
        if (expect_safe) {
            c.passed = v.partition_safe;
            c.detail = v.partition_safe
                           ? "no reachable negative multiplicity"
                           : v.counterexample->input.str() + " -> " +
                                 v.counterexample->output.str();
        } else if (!v.partition_safe && v.counterexample->input == frozen_in &&
                   v.counterexample->branch_label == "1" &&
                   v.counterexample->output == frozen_out) {
            c.detail = v.counterexample->input.str() + " -" +
                       v.counterexample->branch_label + "-> " +
                       v.counterexample->output.str();
        } else {
            c.passed = false;
            c.detail = v.partition_safe ? "unexpectedly safe"
                                        : "unexpected counterexample " +
                                              v.counterexample->input.str();
        }
        out.push_back(std::move(c));
    };
    safety(defs[0], true);   // triangle
    safety(defs[1], false);  // monkemeyer
    safety(defs[2], false);  // cassaigne
    safety(defs[3], true);   // t12e12
    safety(defs[4], true);   // t13_12_12
    safety(defs[5], true);   // t132_12_e
    return out;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, std::optional<std::int64_t> bound) {
    SuiteReport rep;
    rep.suite = suite;
    if (suite == "palindrome") {
        rep.bound = bound.value_or(60);
        rep.checks = suite_palindrome(rep.bound);
    } else if (suite == "conjugation") {
        rep.bound = bound.value_or(60);
        rep.checks = suite_conjugation(rep.bound);
    } else if (suite == "counting") {
        rep.bound = bound.value_or(120);
        rep.checks = suite_counting(rep.bound);
    } else if (suite == "allowable") {
        rep.bound = bound.value_or(60);
        rep.checks = suite_allowable(rep.bound);
    } else if (suite == "zoo") {
        rep.bound = bound.value_or(100);
        rep.checks = suite_zoo(rep.bound);
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return rep;
}

nlohmann::ordered_json report_to_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["bound"] = r.bound;
    j["passed"] = r.passed();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"cases", c.cases},
                          {"detail", c.detail}});
    j["checks"] = std::move(checks);
    return j;
}

std::string render_report(const SuiteReport& r, Format f) {
    if (f == Format::json) return report_to_json(r).dump(2) + "\n";
    std::ostringstream os;
    if (f == Format::tsv || f == Format::csv) {
        const char sep = f == Format::tsv ? '\t' : ',';
        os << "check" << sep << "passed" << sep << "cases" << sep << "detail\n";
        for (const auto& c : r.checks) {
            std::string detail = f == Format::csv ? csv_cell(c.detail) : c.detail;
            os << c.name << sep << (c.passed ? "true" : "false") << sep << c.cases
               << sep << detail << '\n';
        }
        return os.str();
    }
    os << "suite " << r.suite << " (bound " << r.bound << ")\n";
    std::size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks) {
        os << "  " << (c.passed ? "PASS  " : "FAIL  ") << c.name
           << std::string(width - c.name.size(), ' ') << "  cases=" << c.cases;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << '\n';
    }
    os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace partdyn
