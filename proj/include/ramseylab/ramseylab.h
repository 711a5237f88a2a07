/*
 * C interface to ramseylab.
 *
 * Objects are opaque handles created by rl_*_new / parse / construction calls
 * and released with the matching rl_*_free. Every call that can fail returns
 * an rl_status; on failure rl_last_error() describes the problem (per thread).
 * Strings returned through char ** are heap allocated and must be released
 * with rl_string_free. Structured results are returned as JSON documents.
 */
#ifndef RAMSEYLAB_H
#define RAMSEYLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RL_API __declspec(dllexport)
#else
#define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
    RL_OK = 0,
    RL_ERR_INVALID_PARAMETERS = 1,
    RL_ERR_INVALID_VERTEX = 2,
    RL_ERR_PARSE = 3,
    RL_ERR_INVALID_ASSIGNMENT = 4,
    RL_ERR_TOO_LARGE = 5,
    RL_ERR_INTERNAL = 6,
    RL_ERR_NULL_ARGUMENT = 7
} rl_status;

/* Outcome codes shared by the decision calls. */
typedef enum rl_verdict {
    RL_VERDICT_HOLDS = 0,     /* property holds / pattern absent / exact */
    RL_VERDICT_WITNESS = 1,   /* witness found / fails */
    RL_VERDICT_UNKNOWN = 2    /* budget exhausted / lower bound only / undecided */
} rl_verdict;

typedef struct rl_hypergraph rl_hypergraph;
typedef struct rl_coloring rl_coloring;

RL_API const char * rl_version(void);
RL_API const char * rl_last_error(void);
/* 1-based line of the last parse error, 0 if none. */
RL_API int rl_last_error_line(void);
RL_API void rl_string_free(char * s);

/* hypergraphs */
RL_API rl_status rl_hypergraph_parse(const char * text, rl_hypergraph ** out);
RL_API rl_status rl_hypergraph_serialize(const rl_hypergraph * h, char ** out);
RL_API void rl_hypergraph_free(rl_hypergraph * h);
RL_API int rl_hypergraph_uniformity(const rl_hypergraph * h);
RL_API int rl_hypergraph_vertex_count(const rl_hypergraph * h);
RL_API size_t rl_hypergraph_edge_count(const rl_hypergraph * h);

RL_API rl_status rl_hypergraph_complete(int n, int k, rl_hypergraph ** out);
RL_API rl_status rl_hypergraph_degree(const rl_hypergraph * h, int v, size_t * out);
RL_API rl_status rl_hypergraph_max_degree(const rl_hypergraph * h, int * vertex, size_t * degree);
RL_API rl_status rl_hypergraph_link(const rl_hypergraph * h, int v, rl_hypergraph ** out);
RL_API rl_status rl_hypergraph_shadow(const rl_hypergraph * h, rl_hypergraph ** out);
/* JSON: [{"set":[..],"count":c}, ...] in lexicographic order */
RL_API rl_status rl_hypergraph_shadow_multiplicity(const rl_hypergraph * h, char ** json);
RL_API rl_status rl_hypergraph_remove_vertices(const rl_hypergraph * h, const int * vertices, size_t count, rl_hypergraph ** out);
/* JSON summary: k, n, m, degrees, max_degree */
RL_API rl_status rl_hypergraph_describe(const rl_hypergraph * h, char ** json);

/* patterns; *found is 1 when a witness exists. witness_json may be NULL. */
RL_API rl_status rl_find_loose_path(const rl_hypergraph * h, int length, int * found, char ** witness_json);
/* *center is -1 when h is not a star; *full is 1 for a full star. */
RL_API rl_status rl_star_center(const rl_hypergraph * h, int * center, int * full);

/* colorings */
RL_API rl_status rl_coloring_parse(const char * text, rl_coloring ** out);
RL_API rl_status rl_coloring_serialize(const rl_coloring * c, char ** out);
RL_API void rl_coloring_free(rl_coloring * c);
RL_API rl_status rl_find_mono_loose_path(const rl_coloring * c, int length, int * found, char ** witness_json);

/* constructions */
RL_API rl_status rl_star_clique_coloring(int k, int r, rl_coloring ** out);
RL_API rl_status rl_full_star(int n, int k, int center, rl_hypergraph ** out);
RL_API rl_status rl_pair_cover(int n, int k, int a, int b, rl_hypergraph ** out);
RL_API rl_status rl_ramsey_bounds(int k, int r, char ** json);

/* search */
typedef struct rl_search_options {
    int k;
    int r;
    int n;
    uint64_t budget;     /* 0 = unlimited */
    int threads;         /* >= 1 */
    int vertex_pruning;  /* 0 or 1 */
    int exhaustive;      /* 1 = unpruned enumeration oracle */
} rl_search_options;

/* JSON: verdict, witness (coloring file text or null), stats */
RL_API rl_status rl_decide_ramsey(const rl_search_options * options, rl_verdict * verdict, char ** json);
/* pattern: "loose-path-3" or "loose-path-2" */
RL_API rl_status rl_turan_max_edges(int k, int n, const char * pattern, uint64_t budget, int threads, rl_verdict * status, char ** json);
RL_API rl_status rl_enumerate_loose_paths(int n, int k, int length, size_t * count, char ** json);
RL_API rl_status rl_export_cnf(int k, int r, int n, char ** dimacs, size_t * variables, size_t * clauses);

/* machinery */
RL_API rl_status rl_peel_min_degree(const rl_hypergraph * h, rl_hypergraph ** out);
/* JSON in: {"left":[..],"right":[..],"edges":[[l,r],..]} */
RL_API rl_status rl_prune_bipartite(const char * json_in, char ** json_out);
/* JSON in: {"weights":{"v":"p/q", ...}} (numbers or strings) */
RL_API rl_status rl_greedy_tripartition(const char * json_in, char ** json_out);
/* JSON in: {"n":n,"k":k,"assignments":[{"set":[..],"apex":v},..]} */
RL_API rl_status rl_derandomized_split(const char * json_in, char ** json_out);
RL_API rl_status rl_stability_deficiency(const rl_hypergraph * h, char ** json);
/* b and precision are rationals in text ("p/q", "0.9", "1e-9") */
RL_API rl_status rl_prop32_deficiency_bound(const char * b, int k, int n, const char * precision, char ** json);
RL_API rl_status rl_claim_mm_lower_bound(const char * b, int k, int n, const char * precision, char ** json);
/* r_list may be NULL when r_count is 0. *verdict: HOLDS when every
 * inequality holds, WITNESS when one fails, UNKNOWN when one is undecided. */
RL_API rl_status rl_verify_constant_inequalities(int k, long a, const long * r_list, size_t r_count, rl_verdict * verdict, char ** json);
/* Seeded random postcondition checks of peel, prune, tripartition and split. */
RL_API rl_status rl_machinery_property_suite(uint64_t seed, int count, rl_verdict * verdict, char ** json);

#ifdef __cplusplus
}
#endif

#endif
