#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbit.hpp"

namespace partdyn {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;  // cases examined (states, pairs, weights, ...)
    std::string detail;      // first counterexample, or a note on what held

    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}
};

struct SuiteReport {
    std::string suite;
    std::int64_t bound = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

// Named invariant suites:
//   palindrome  — two-part conjugation duality across reversed branch words
//                 (bound = max weight, default 60)
//   conjugation — involution, Young transpose, per-step triangle diagram,
//                 word reversal in higher dimensions (bound = max part,
//                 default 60)
//   counting    — two-part counting formulas agree, coprime-depth variant
//                 matches exactly at primes and 4, orbit cover partitions,
//                 obtainability characterization (bound = max n, default 120)
//   allowable   — multiplicity-vector laws over full orbit sweeps and the
//                 unreachable vector [2,1,2] (bound = max weight, default 60)
//   zoo         — per-map partition-safety verdicts with pinned
//                 counterexamples (bound = max weight, default 100)
// Workers for the counting sweep come from PARTDYN_THREADS (default 1).
SuiteReport run_suite(const std::string& suite, std::optional<std::int64_t> bound);

nlohmann::ordered_json report_to_json(const SuiteReport& r);
std::string render_report(const SuiteReport& r, Format f);

int worker_count();  // PARTDYN_THREADS clamped to [1, 256]

}  // namespace partdyn
