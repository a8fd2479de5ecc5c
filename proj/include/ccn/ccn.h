/*
 * ccn: counting and classifying identical-edge homogeneous coupled cell
 * networks.
 *
 * C interface over the C++ core. Objects are opaque handles created by a
 * *_create / *_run / *_from_* call and released by the matching *_destroy.
 * Every fallible function returns a ccn_status; on failure a description is
 * available from ccn_last_error() on the same thread. Strings returned through
 * char** out-parameters are heap allocated and must be released with
 * ccn_string_free().
 *
 * Networks are stored as n x n in-adjacency matrices in row-major order:
 * entry (i, j) is the number of arcs from cell j into cell i, and every row
 * sums to the network degree r.
 */
#ifndef CCN_CCN_H
#define CCN_CCN_H

#include <stddef.h>
#include <stdint.h>

#if defined(CCN_BUILDING_LIBRARY)
#define CCN_API __attribute__((visibility("default")))
#else
#define CCN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ccn_status {
    CCN_OK = 0,
    CCN_ERR_INVALID_ARGUMENT = 1, /* null handle or out-pointer, bad enum value */
    CCN_ERR_DOMAIN = 2,           /* argument outside the operation's domain */
    CCN_ERR_MALFORMED_NETWORK = 3,
    CCN_ERR_UNSUPPORTED_SIZE = 4, /* cell count above the canonical-form cap */
    CCN_ERR_BUDGET_EXCEEDED = 5,  /* |Omega| above the enumeration budget */
    CCN_ERR_PARSE = 6,
    CCN_ERR_INTERNAL = 7,         /* a guaranteed identity failed: a defect */
    CCN_ERR_OUT_OF_MEMORY = 8
} ccn_status;

typedef enum ccn_family {
    CCN_FAMILY_H = 0, /* all networks up to isomorphism */
    CCN_FAMILY_K = 1, /* connected networks */
    CCN_FAMILY_M = 2  /* minimal connected networks */
} ccn_family;

typedef enum ccn_table_format { CCN_TABLE_CSV = 0, CCN_TABLE_MARKDOWN = 1, CCN_TABLE_JSON = 2 } ccn_table_format;

typedef enum ccn_report_format { CCN_REPORT_TEXT = 0, CCN_REPORT_JSON = 1 } ccn_report_format;

typedef struct ccn_counter ccn_counter;
typedef struct ccn_network ccn_network;
typedef struct ccn_census ccn_census;

typedef struct ccn_census_options {
    uint64_t budget;   /* largest |Omega| to enumerate */
    uint32_t workers;  /* threads; results do not depend on this */
    uint32_t size_cap; /* largest cell count for canonical forms */
} ccn_census_options;

/* ---- errors and strings ------------------------------------------------ */

CCN_API const char* ccn_status_name(ccn_status status);
/* Message for the last failure on this thread; "" if none. */
CCN_API const char* ccn_last_error(void);
CCN_API void ccn_string_free(char* s);
CCN_API const char* ccn_version(void);

/* ---- counting ------------------------------------------------------------ */

CCN_API ccn_status ccn_parse_family(const char* text, ccn_family* out);
CCN_API ccn_status ccn_parse_table_format(const char* text, ccn_table_format* out);

/* A memoizing evaluator for H, K and M. Safe to share between threads. */
CCN_API ccn_status ccn_counter_create(ccn_counter** out);
CCN_API void ccn_counter_destroy(ccn_counter* counter);

/* Exact decimal value of family(n, r). */
CCN_API ccn_status ccn_count(ccn_counter* counter, ccn_family family, uint32_t n, uint32_t r, char** out_decimal);

/* Per-cycle-type terms of the orbit sum behind H(n, r), one line each:
 * "[1^2 2^1] class_size=3 fixed=..." */
CCN_API ccn_status ccn_count_breakdown(uint32_t n, uint32_t r, char** out_text);

CCN_API ccn_status ccn_table(ccn_counter* counter, ccn_family family, uint32_t max_n, uint32_t max_r,
                             ccn_table_format format, char** out_text);

CCN_API ccn_status ccn_euler_totient(uint64_t r, uint64_t* out);

/* ---- networks ------------------------------------------------------------ */

/* entries: n*n values, row-major. Degree 0 is rejected unless allow_zero_degree. */
CCN_API ccn_status ccn_network_create(uint32_t n, const uint32_t* entries, int allow_zero_degree, ccn_network** out);
/* {"cells":n,"in_adjacency":[[...],...]}; len is the byte length of text. */
CCN_API ccn_status ccn_network_from_json(const char* text, size_t len, int allow_zero_degree, ccn_network** out);
CCN_API ccn_status ccn_network_to_json(const ccn_network* g, char** out_json);
CCN_API void ccn_network_destroy(ccn_network* g);

CCN_API uint32_t ccn_network_cells(const ccn_network* g);
CCN_API uint32_t ccn_network_degree(const ccn_network* g);
CCN_API ccn_status ccn_network_entry(const ccn_network* g, uint32_t target, uint32_t source, uint32_t* out);

CCN_API ccn_status ccn_add_loops(const ccn_network* g, uint32_t s, ccn_network** out);
CCN_API ccn_status ccn_split_edges(const ccn_network* g, uint32_t k, ccn_network** out);
/* Reduced network plus the loops removed per cell and the divisor applied. */
CCN_API ccn_status ccn_reduce(const ccn_network* g, ccn_network** out, uint32_t* loops_removed, uint32_t* divisor);
CCN_API ccn_status ccn_is_reduced(const ccn_network* g, int* out);
CCN_API ccn_status ccn_is_connected(const ccn_network* g, int* out);

/* size_cap 0 selects the default (8). */
CCN_API ccn_status ccn_canonical_form(const ccn_network* g, uint32_t size_cap, ccn_network** out);
CCN_API ccn_status ccn_are_isomorphic(const ccn_network* a, const ccn_network* b, uint32_t size_cap, int* out);
CCN_API ccn_status ccn_are_ode_equivalent(const ccn_network* a, const ccn_network* b, uint32_t size_cap, int* out);
/* Independent decision through linear equivalence of the adjacency pencils. */
CCN_API ccn_status ccn_linear_equiv_oracle(const ccn_network* a, const ccn_network* b, uint32_t size_cap, int* out);

/* ---- brute-force oracle -------------------------------------------------- */

CCN_API void ccn_census_options_default(ccn_census_options* options);

/* |Omega_{n,r}| as a decimal string. */
CCN_API ccn_status ccn_omega_size(uint32_t n, uint32_t r, char** out_decimal);

/* options may be NULL for defaults. */
CCN_API ccn_status ccn_census_run(uint32_t n, uint32_t r, const ccn_census_options* options, ccn_census** out);
CCN_API void ccn_census_destroy(ccn_census* census);
CCN_API ccn_status ccn_census_totals(const ccn_census* census, uint64_t* total, uint64_t* connected,
                                     uint64_t* minimal_connected);
/* Isomorphism classes, sorted by canonical form. */
CCN_API size_t ccn_census_class_count(const ccn_census* census);
CCN_API ccn_status ccn_census_class(const ccn_census* census, size_t index, ccn_network** representative,
                                    int* connected, int* reduced);

/* Census totals against the closed forms, plus the per-class expansion
 * structure. *all_pass is 1 iff every check passed. */
CCN_API ccn_status ccn_verify(uint32_t n, uint32_t r, const ccn_census_options* options, ccn_report_format format,
                              char** out_report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* CCN_CCN_H */
