// Command-line front end. Talks to the library exclusively through the C
// interface, so it doubles as a smoke test of the shared-library surface.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "partdyn.h"

namespace {

struct PartHandle {
    pd_partition* p = nullptr;
    ~PartHandle() { pd_partition_free(p); }
};

struct DefHandle {
    pd_mapdef* d = nullptr;
    ~DefHandle() { pd_mapdef_free(d); }
};

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

// Prints the rendered text on success; on failure reports the library's
// error message and signals a usage error.
int emit(pd_status st, char** s) {
    if (st != PD_OK) return usage_error(pd_last_error());
    std::fputs(*s, stdout);
    pd_string_free(*s);
    return 0;
}

int make_partition(const std::string& parts, const std::string& mults, PartHandle& h) {
    if (pd_partition_make(parts.c_str(), mults.c_str(), &h.p) != PD_OK)
        return usage_error(pd_last_error());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continued-fraction dynamics on integer partitions"};
    app.require_subcommand(1);

    std::string format = "pretty";
    app.add_option("--format", format, "output format: json|csv|tsv|pretty")
        ->capture_default_str();

    std::string fraction;
    CLI::App* cf = app.add_subcommand("cf", "continued-fraction expansion of p/q");
    cf->fallthrough();
    cf->add_option("fraction", fraction, "fraction p/q in (0,1]")->required();

    unsigned levels = 0;
    bool sorted = false;
    CLI::App* tree = app.add_subcommand("tree", "levels of the Farey tree");
    tree->fallthrough();
    tree->add_option("--levels", levels, "number of levels (>= 1)")->required();
    tree->add_flag("--sorted", sorted, "sort each level ascending");

    std::string parts, mults, map_name = "farey";
    CLI::App* orbit = app.add_subcommand("orbit", "orbit of a partition under a map");
    orbit->fallthrough();
    orbit->add_option("--parts", parts, "distinct part sizes, decreasing")->required();
    orbit->add_option("--mults", mults, "multiplicities, same length")->required();
    orbit->add_option("--map", map_name,
                      "farey|triangle|t12e12|monkemeyer|cassaigne|"
                      "t13_12_12|t13_13_12|custom:<path>")
        ->capture_default_str();

    std::string count_n, count_range, methods;
    CLI::App* count = app.add_subcommand("count", "two-distinct-part partition counts");
    count->fallthrough();
    CLI::Option* n_opt = count->add_option("--n", count_n, "single weight n >= 2");
    CLI::Option* range_opt = count->add_option("--range", count_range, "weight range A..B");
    n_opt->excludes(range_opt);
    count->add_option("--methods", methods, "subset of formula,kim,brute,coprime");

    std::string cj_parts, cj_mults;
    bool shape = false;
    CLI::App* conjugate = app.add_subcommand("conjugate", "conjugate partition");
    conjugate->fallthrough();
    conjugate->add_option("--parts", cj_parts, "distinct part sizes, decreasing")->required();
    conjugate->add_option("--mults", cj_mults, "multiplicities, same length")->required();
    conjugate->add_flag("--shape", shape, "draw both Young shapes");

    std::string suite;
    long long bound = -1;
    CLI::App* verify = app.add_subcommand("verify", "run a randomized invariant suite");
    verify->fallthrough();
    verify->add_option("--suite", suite, "palindrome|conjugation|counting|allowable|zoo")
        ->required();
    verify->add_option("--bound", bound, "weight bound (default depends on suite)");

    std::string gen_n;
    CLI::App* generations = app.add_subcommand("generations", "generation grid for weight n");
    generations->fallthrough();
    generations->add_option("--n", gen_n, "weight n >= 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const char* fmt = format.c_str();
    char* out = nullptr;

    if (*cf) return emit(pd_cf_render(fraction.c_str(), fmt, &out), &out);

    if (*tree) {
        if (levels == 0) return usage_error("tree: --levels must be at least 1");
        return emit(pd_tree_render(levels, sorted ? 1 : 0, fmt, &out), &out);
    }

    if (*orbit) {
        PartHandle root;
        if (int rc = make_partition(parts, mults, root)) return rc;
        if (map_name.rfind("custom:", 0) == 0) {
            DefHandle def;
            if (pd_mapdef_load_file(map_name.c_str() + 7, &def.d) != PD_OK)
                return usage_error(pd_last_error());
            return emit(pd_orbit_render_def(def.d, root.p, fmt, &out), &out);
        }
        return emit(pd_orbit_render(map_name.c_str(), root.p, fmt, &out), &out);
    }

    if (*count) {
        std::string lo, hi;
        if (!count_n.empty()) {
            lo = hi = count_n;
        } else {
            std::size_t dots = count_range.find("..");
            if (count_range.empty() || dots == std::string::npos)
                return usage_error("count: pass --n N or --range A..B");
            lo = count_range.substr(0, dots);
            hi = count_range.substr(dots + 2);
        }
        return emit(pd_count_render(lo.c_str(), hi.c_str(),
                                    methods.empty() ? nullptr : methods.c_str(), fmt, &out),
                    &out);
    }

    if (*conjugate) {
        PartHandle p;
        if (int rc = make_partition(cj_parts, cj_mults, p)) return rc;
        return emit(pd_conjugate_render(p.p, shape ? 1 : 0, fmt, &out), &out);
    }

    if (*verify) {
        int passed = 0;
        pd_status st = pd_verify_render(suite.c_str(), bound, fmt, &passed, &out);
        if (st != PD_OK) return usage_error(pd_last_error());
        std::fputs(out, stdout);
        pd_string_free(out);
        return passed ? 0 : 1;
    }

    if (*generations) return emit(pd_generations_render(gen_n.c_str(), fmt, &out), &out);

    return usage_error("no command");
}
