#include "partdyn.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ios>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfrac.hpp"
#include "farey.hpp"
#include "json.hpp"
#include "mcf_zoo.hpp"
#include "orbit.hpp"
#include "partitions.hpp"
#include "verify.hpp"
#include "views.hpp"

using namespace partdyn;

struct pd_partition {
    Partition value;
};

struct pd_mapdef {
    MapDef value;
};

namespace {

thread_local std::string g_last_error;

// Carries a status through the generic handler below.
struct coded_error : std::runtime_error {
    pd_status code;
    coded_error(pd_status c, const std::string& m) : std::runtime_error(m), code(c) {}
};

template <typename F>
pd_status guarded(F&& body) {
    try {
        body();
        return PD_OK;
    } catch (const coded_error& e) {
        g_last_error = e.what();
        return e.code;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return PD_ERR_PARSE;
    } catch (const std::ios_base::failure& e) {
        g_last_error = e.what();
        return PD_ERR_IO;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PD_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PD_ERR_ARGUMENT;
    } catch (const std::runtime_error& e) {
        // boost integer parsing reports malformed digits this way
        g_last_error = e.what();
        return PD_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PD_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw coded_error(PD_ERR_ARGUMENT, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Format parse_format_c(const char* format) {
    require(format, "format");
    try {
        return parse_format(format);
    } catch (const std::exception& e) {
        throw coded_error(PD_ERR_FORMAT, e.what());
    }
}

Frac parse_frac_c(const char* fraction) {
    require(fraction, "fraction");
    try {
        return Frac::parse(fraction);
    } catch (const std::domain_error&) {
        throw;  // well-formed but outside (0, 1]
    } catch (const std::exception& e) {
        throw coded_error(PD_ERR_PARSE, e.what());
    }
}

Int parse_int_c(const char* text, const char* what) {
    require(text, what);
    try {
        return Int(std::string(text));
    } catch (const std::exception&) {
        throw coded_error(PD_ERR_PARSE,
                          std::string(what) + ": '" + text + "' is not a decimal integer");
    }
}

std::vector<Int> parse_int_list(const char* text, const char* what) {
    require(text, what);
    std::vector<Int> out;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty())
            throw coded_error(PD_ERR_PARSE, std::string(what) + ": empty entry in list");
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw coded_error(PD_ERR_PARSE,
                              std::string(what) + ": '" + tok + "' is not a decimal integer");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) out.push_back(std::move(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

extern "C" {

const char* pd_last_error(void) { return g_last_error.c_str(); }

void pd_string_free(char* s) { std::free(s); }

const char* pd_version(void) { return "1.0.0"; }

pd_status pd_partition_make(const char* parts, const char* mults, pd_partition** out) {
    return guarded([&] {
        require(out, "out");
        std::vector<Int> p = parse_int_list(parts, "parts");
        std::vector<Int> m = parse_int_list(mults, "mults");
        *out = new pd_partition{Partition::make(std::move(p), std::move(m))};
    });
}

void pd_partition_free(pd_partition* p) { delete p; }

pd_status pd_partition_compact(const pd_partition* p, char** out) {
    return guarded([&] {
        require(p, "partition");
        require(out, "out");
        *out = dup_string(p->value.compact());
    });
}

pd_status pd_partition_conjugate(const pd_partition* p, pd_partition** out) {
    return guarded([&] {
        require(p, "partition");
        require(out, "out");
        *out = new pd_partition{p->value.conjugate()};
    });
}

pd_status pd_mapdef_builtin(const char* name, int m, pd_mapdef** out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = new pd_mapdef{mapdef_builtin(name, m)};
    });
}

pd_status pd_mapdef_load_file(const char* path, pd_mapdef** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        if (std::ifstream probe(path); !probe)
            throw coded_error(PD_ERR_IO, std::string("cannot open map file: ") + path);
        *out = new pd_mapdef{mapdef_load_file(path)};
    });
}

pd_status pd_mapdef_name(const pd_mapdef* def, char** out) {
    return guarded([&] {
        require(def, "mapdef");
        require(out, "out");
        *out = dup_string(def->value.name);
    });
}

void pd_mapdef_free(pd_mapdef* def) { delete def; }

pd_status pd_cf_render(const char* fraction, const char* format, char** out) {
    return guarded([&] {
        require(out, "out");
        Format f = parse_format_c(format);
        *out = dup_string(render_cf(parse_frac_c(fraction), f));
    });
}

pd_status pd_depth_of(const char* fraction, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(depth(parse_frac_c(fraction)).str());
    });
}

pd_status pd_tree_render(unsigned levels, int sorted, const char* format, char** out) {
    return guarded([&] {
        require(out, "out");
        Format f = parse_format_c(format);
        *out = dup_string(render_tree(levels, sorted != 0, f));
    });
}

pd_status pd_orbit_render(const char* map, const pd_partition* root, const char* format,
                          char** out) {
    return guarded([&] {
        require(map, "map");
        require(root, "root");
        require(out, "out");
        Format f = parse_format_c(format);
        *out = dup_string(render_orbit(run_orbit(map, root->value), f));
    });
}

pd_status pd_orbit_render_def(const pd_mapdef* def, const pd_partition* root,
                              const char* format, char** out) {
    return guarded([&] {
        require(def, "mapdef");
        require(root, "root");
        require(out, "out");
        Format f = parse_format_c(format);
        *out = dup_string(render_orbit(orbit_zoo(def->value, root->value), f));
    });
}

pd_status pd_count_render(const char* lo, const char* hi, const char* methods,
                          const char* format, char** out) {
    return guarded([&] {
        require(out, "out");
        Format f = parse_format_c(format);
        Int l = parse_int_c(lo, "lo");
        Int h = parse_int_c(hi, "hi");
        std::vector<std::string> m =
            methods && *methods ? split_csv(methods)
                                : std::vector<std::string>{"formula", "kim", "brute", "coprime"};
        *out = dup_string(render_count(l, h, m, f));
    });
}

pd_status pd_conjugate_render(const pd_partition* p, int with_shape, const char* format,
                              char** out) {
    return guarded([&] {
        require(p, "partition");
        require(out, "out");
        Format f = parse_format_c(format);
        *out = dup_string(render_conjugate(p->value, with_shape != 0, f));
    });
}

pd_status pd_generations_render(const char* n, const char* format, char** out) {
    return guarded([&] {
        require(out, "out");
        Format f = parse_format_c(format);
        *out = dup_string(render_generations(parse_int_c(n, "n"), f));
    });
}

pd_status pd_verify_render(const char* suite, long long bound, const char* format,
                           int* passed, char** out) {
    return guarded([&] {
        require(suite, "suite");
        require(passed, "passed");
        require(out, "out");
        Format f = parse_format_c(format);
        std::optional<std::int64_t> b;
        if (bound >= 0) b = bound;
        SuiteReport report = run_suite(suite, b);
        *passed = report.passed() ? 1 : 0;
        *out = dup_string(render_report(report, f));
    });
}

}  // extern "C"
