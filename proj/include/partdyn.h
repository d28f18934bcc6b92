#ifndef PARTDYN_H
#define PARTDYN_H

/* C interface to the partition-dynamics library.
 *
 * Conventions:
 *   - Every fallible call returns a pd_status; PD_OK means success.
 *   - On failure, pd_last_error() returns a message for the failing call
 *     (thread-local; valid until the next failing call on the same thread).
 *   - Strings returned through char** out parameters are heap-allocated;
 *     release them with pd_string_free().
 *   - Handles (pd_partition, pd_mapdef) are opaque; release them with the
 *     matching *_free(). Freeing NULL is a no-op.
 *   - Integer-valued inputs are decimal strings, so values are not capped
 *     at any machine width. Lists are comma-separated ("19,8").
 *   - format selects a renderer: "json", "csv", "tsv", or "pretty".
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
    PD_OK = 0,
    PD_ERR_ARGUMENT = 1, /* bad call: NULL pointer, unknown name, bad flag */
    PD_ERR_DOMAIN = 2,   /* arguments outside a map's or function's domain */
    PD_ERR_PARSE = 3,    /* malformed fraction, integer, list, or JSON */
    PD_ERR_FORMAT = 4,   /* unknown output format */
    PD_ERR_IO = 5,       /* file could not be read */
    PD_ERR_INTERNAL = 6
} pd_status;

const char* pd_last_error(void);
void pd_string_free(char* s);
const char* pd_version(void);

/* ---- partitions ------------------------------------------------------- */

typedef struct pd_partition pd_partition;

/* Builds a partition from part/multiplicity lists ("5,3,2" x "3,2,1").
 * Parts must be strictly decreasing and positive, multiplicities
 * nonnegative with the first positive, and both lists equally long. */
pd_status pd_partition_make(const char* parts, const char* mults, pd_partition** out);
void pd_partition_free(pd_partition* p);

pd_status pd_partition_compact(const pd_partition* p, char** out); /* "(5^3,3^2,2)" */
pd_status pd_partition_conjugate(const pd_partition* p, pd_partition** out);

/* ---- map definitions --------------------------------------------------- */

typedef struct pd_mapdef pd_mapdef;

/* name: "triangle" (any m >= 2), or one of "monkemeyer", "cassaigne",
 * "t12e12", "t13_12_12", "t132_12_e" (m = 3). */
pd_status pd_mapdef_builtin(const char* name, int m, pd_mapdef** out);
pd_status pd_mapdef_load_file(const char* path, pd_mapdef** out);
pd_status pd_mapdef_name(const pd_mapdef* def, char** out);
void pd_mapdef_free(pd_mapdef* def);

/* ---- renderers ---------------------------------------------------------- */

/* Digit expansion, depth, mirror, and convergents of "p/q" in (0, 1]. */
pd_status pd_cf_render(const char* fraction, const char* format, char** out);

/* Tree level of "p/q" as a decimal string. */
pd_status pd_depth_of(const char* fraction, char** out);

/* Levels 1..levels of the inverse-branch tree (levels <= 22). */
pd_status pd_tree_render(unsigned levels, int sorted, const char* format, char** out);

/* Orbit of root under a builtin map name ("farey", "triangle", or a zoo
 * name), or under a loaded definition. */
pd_status pd_orbit_render(const char* map, const pd_partition* root,
                          const char* format, char** out);
pd_status pd_orbit_render_def(const pd_mapdef* def, const pd_partition* root,
                              const char* format, char** out);

/* Partition counts for each n in lo..hi (decimal strings, 2 <= lo <= hi).
 * methods: comma-separated subset of "formula,kim,brute,coprime";
 * NULL or "" selects all four. */
pd_status pd_count_render(const char* lo, const char* hi, const char* methods,
                          const char* format, char** out);

/* Conjugate report; with_shape != 0 adds both Young diagrams. */
pd_status pd_conjugate_render(const pd_partition* p, int with_shape,
                              const char* format, char** out);

/* Generation grid of every reduced r/n with 2r <= n (n >= 2, decimal). */
pd_status pd_generations_render(const char* n, const char* format, char** out);

/* Runs a verification suite ("palindrome", "conjugation", "counting",
 * "allowable", "zoo"). bound < 0 selects the suite's default. *passed is
 * set to 1 when every check passed, else 0; the report renders to *out. */
pd_status pd_verify_render(const char* suite, long long bound, const char* format,
                           int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PARTDYN_H */
