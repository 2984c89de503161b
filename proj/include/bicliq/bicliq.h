#ifndef BICLIQ_BICLIQ_H
#define BICLIQ_BICLIQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(BICLIQ_BUILDING)
#define BQ_API __attribute__((visibility("default")))
#else
#define BQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque immutable bipartite graph. */
typedef struct bq_graph bq_graph;

typedef enum bq_status {
    BQ_OK = 0,
    BQ_RAGGED_INPUT,
    BQ_BAD_CHAR,
    BQ_BAD_JSON,
    BQ_PATTERN_TOO_LARGE,
    BQ_TOO_LARGE,
    BQ_NOT_SQUARE,
    BQ_DEGREE_TOO_HIGH,
    BQ_BAD_PATTERN,
    BQ_BAD_MODULUS,
    BQ_UNSUPPORTED,
    BQ_TIMEOUT,
    BQ_INDEX_OUT_OF_RANGE,
    BQ_INVALID_ARGUMENT,
    BQ_INTERNAL
} bq_status;

typedef enum bq_gen_method { BQ_GEN_REJECTION = 0, BQ_GEN_REPAIR = 1 } bq_gen_method;

BQ_API const char* bq_version(void);
BQ_API const char* bq_status_name(bq_status status);
/* Message of the last failing call on this thread ("" if none). */
BQ_API const char* bq_last_error(void);
/* Frees any string returned through a char** out parameter. */
BQ_API void bq_string_free(char* s);

/* Graphs. Text is the 0/1 matrix format or JSON {"n_top","n_bottom","rows"}. */
BQ_API bq_status bq_graph_parse(const char* text, bq_graph** out);
/* "H,2,1", "M,1,1", "Mstar,2,2", "singlerow,2,3", "P4", "2K2", "H4", "P7", ... */
BQ_API bq_status bq_graph_family(const char* spec, bq_graph** out);
BQ_API void bq_graph_free(bq_graph* g);
BQ_API size_t bq_graph_n_top(const bq_graph* g);
BQ_API size_t bq_graph_n_bottom(const bq_graph* g);
/* 1 edge, 0 non-edge, -1 out of range. */
BQ_API int bq_graph_has_edge(const bq_graph* g, size_t top, size_t bottom);
BQ_API bq_status bq_graph_to_json(const bq_graph* g, char** out);
BQ_API bq_status bq_graph_to_matrix(const bq_graph* g, char** out);
BQ_API bq_status bq_graph_complement(const bq_graph* g, bq_graph** out);
BQ_API bq_status bq_graph_transpose(const bq_graph* g, bq_graph** out);

/* {"found":bool,"embedding":{...}|null} */
BQ_API bq_status bq_find_induced_copy(const bq_graph* host, const bq_graph* pattern, char** out);

/* which: "h", "omega" or "alpha". {"t","certificate"} */
BQ_API bq_status bq_solve(const bq_graph* g, const char* which, char** out);
/* {"value","argmin","graphs_checked"}; n <= 4. */
BQ_API bq_status bq_forb_min(size_t n, const bq_graph* pattern, char** out);

/* PatternClass JSON. */
BQ_API bq_status bq_classify(const bq_graph* pattern, char** out);
/* JSON array of graphs. */
BQ_API bq_status bq_enumerate(size_t k, size_t l, char** out);

/* Dichotomy JSON. bq_extract classifies the pattern first. */
BQ_API bq_status bq_extract(const bq_graph* g, const bq_graph* pattern, char** out);
/* family: Hs, Ms, MsStar, P4, 2K2, H4 or SingleRow. */
BQ_API bq_status bq_extract_family(const bq_graph* g, const char* family, size_t s1, size_t s2,
                                   char** out);
BQ_API bq_status bq_ehp_embed(const bq_graph* g, const bq_graph* pattern, char** out);

/* {"is_path","handle_path","forest_a","forest_b","guaranteed"}; parent[root] == root. */
BQ_API bq_status bq_tree_split(const size_t* parent, size_t n, char** out);

/* name: tight-p4, tight-2k2 or tight-h4. */
BQ_API bq_status bq_construct(const char* name, size_t n, bq_graph** out);
/* {"found":bool,"coloring":text|null,"report":{...}|null} */
BQ_API bq_status bq_lll(size_t n, size_t cycle_len, size_t t, double p, uint64_t seed,
                        size_t budget, char** out);
/* {"red_violations","blue_violations","blue_omega"} */
BQ_API bq_status bq_verify_coloring(const char* coloring_text, size_t cycle_len, size_t t,
                                    char** out);

BQ_API bq_status bq_random_pattern_free(size_t n, const bq_graph* pattern, double density,
                                        uint64_t seed, bq_gen_method method, size_t budget,
                                        bq_graph** out);
/* JSON array of rows {"n","trials","min","mean","floor","violations","sub_threshold"}. */
BQ_API bq_status bq_bench(const char* family, size_t s1, size_t s2, size_t n_lo, size_t n_hi,
                          size_t trials, uint64_t seed, char** out);

/* *valid is set to 0 or 1. */
BQ_API bq_status bq_verify_certificate(const bq_graph* g, const char* certificate_json, int* valid);
BQ_API bq_status bq_verify_embedding(const bq_graph* g, const bq_graph* pattern,
                                     const char* embedding_json, int* valid);

#ifdef __cplusplus
}
#endif

#endif
