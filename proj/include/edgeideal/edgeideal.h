/* C interface to the edgeideal library. */
#ifndef EDGEIDEAL_H
#define EDGEIDEAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(EDGEIDEAL_BUILDING)
#define EI_API __attribute__((visibility("default")))
#else
#define EI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ei_status {
    EI_OK = 0,
    EI_INVALID_ARGUMENT = 1,
    EI_LIMIT = 2,
    EI_PRECONDITION = 3,
    EI_ARITHMETIC = 4,
    EI_IO = 5,
    EI_INTERNAL = 6
} ei_status;

typedef struct ei_graph ei_graph;
typedef struct ei_betti ei_betti;
typedef struct ei_report ei_report;

/* prime == 0 selects the rationals */
typedef struct ei_field {
    uint32_t prime;
} ei_field;

typedef struct ei_ainv {
    int alpha;
    int M;
    int a;
    int hdeg;
} ei_ainv;

typedef struct ei_verify_params {
    int n_min; /* 0..0 = default window of the theorem */
    int n_max;
    int samples;
    uint64_t seed;
    ei_field field;
    int jobs;
    int max_n;
} ei_verify_params;

/* Message for the last failing call on this thread; never NULL. */
EI_API const char* ei_last_error(void);
EI_API const char* ei_status_name(ei_status status);
EI_API const char* ei_version(void);

/* Every char* handed out by the library is released with this. */
EI_API void ei_string_free(char* s);
EI_API void ei_masks_free(uint32_t* masks);
EI_API void ei_coeffs_free(int64_t* coeffs);

/* "q" or "gf:P" */
EI_API ei_status ei_field_parse(const char* spec, ei_field* out);

/* graphs; edges are 1-based (u, v) pairs, edges[2k], edges[2k+1] */
EI_API ei_status ei_graph_new(int n, const int* edges, size_t edge_count, ei_graph** out);
/* kind: "path" or "cycle" */
EI_API ei_status ei_graph_family(const char* kind, int n, ei_graph** out);
EI_API ei_status ei_graph_parse(const char* text, ei_graph** out);
EI_API ei_status ei_graph_read(const char* path, ei_graph** out);
EI_API void ei_graph_free(ei_graph* g);

EI_API int ei_graph_order(const ei_graph* g);
EI_API size_t ei_graph_edge_count(const ei_graph* g);
/* 1-based index of a label, 0 when absent */
EI_API int ei_graph_index_of(const ei_graph* g, const char* label);
EI_API ei_status ei_graph_to_edge_list(const ei_graph* g, char** out);
/* bit v-1 of mask is vertex v; rendered like "{x1,x4}" */
EI_API ei_status ei_graph_format_set(const ei_graph* g, uint32_t mask, char** out);

/* vertices are 1-based; the new vertex z is last */
EI_API ei_status ei_graph_suspend(const ei_graph* g, const int* vertices, size_t count, ei_graph** out);
EI_API ei_status ei_graph_suspend_mask(const ei_graph* g, uint32_t mask, ei_graph** out);
EI_API ei_status ei_graph_suspend_full(const ei_graph* g, ei_graph** out);

EI_API ei_status ei_maximal_independent_sets(const ei_graph* g, uint32_t** masks, size_t* count);
EI_API ei_status ei_minimal_vertex_covers(const ei_graph* g, uint32_t** masks, size_t* count);
EI_API ei_status ei_independence_number(const ei_graph* g, int* out);
EI_API ei_status ei_big_height(const ei_graph* g, int* out);

/* homological invariants via Hochster's formula; jobs >= 1 */
EI_API ei_status ei_homological_invariants(const ei_graph* g, ei_field field, int jobs, int* reg, int* pdim);
EI_API ei_status ei_betti_table(const ei_graph* g, ei_field field, int jobs, ei_betti** out);
EI_API ei_status ei_betti_predict_full_suspension(const ei_betti* base, ei_betti** out);
EI_API void ei_betti_free(ei_betti* b);
EI_API uint64_t ei_betti_get(const ei_betti* b, int i, int j);
EI_API int ei_betti_pdim(const ei_betti* b);
EI_API int ei_betti_reg(const ei_betti* b);
EI_API int ei_betti_equal(const ei_betti* a, const ei_betti* b);
EI_API size_t ei_betti_entry_count(const ei_betti* b);
/* k-th nonzero entry in (i, j) order */
EI_API ei_status ei_betti_entry(const ei_betti* b, size_t k, int* i, int* j, uint64_t* beta);
EI_API ei_status ei_betti_to_json(const ei_betti* b, char** out);
EI_API ei_status ei_betti_to_text(const ei_betti* b, char** out);

/* polynomials as coefficient arrays, constant term first */
EI_API ei_status ei_independence_polynomial(const ei_graph* g, int64_t** coeffs, size_t* len);
EI_API ei_status ei_h_polynomial(const ei_graph* g, int64_t** coeffs, size_t* len);
EI_API ei_status ei_polynomial_to_string(const int64_t* coeffs, size_t len, char var, char** out);
EI_API ei_status ei_a_invariant(const ei_graph* g, ei_ainv* out);

/* theorem verification */
EI_API size_t ei_theorem_count(void);
EI_API const char* ei_theorem_name(size_t k);
EI_API void ei_verify_params_default(ei_verify_params* params);
EI_API ei_status ei_verify(const char* theorem, const ei_verify_params* params, ei_report** out);
EI_API void ei_report_free(ei_report* r);
EI_API size_t ei_report_count(const ei_report* r);
EI_API size_t ei_report_failures(const ei_report* r);
EI_API ei_status ei_report_json_lines(const ei_report* r, int failures_only, char** out);
EI_API ei_status ei_report_summary(const ei_report* r, char** out);
/* field: "id", "instance", "expected", "computed", "holds" or a tag key */
EI_API ei_status ei_report_field(const ei_report* r, size_t k, const char* field, char** out);

#ifdef __cplusplus
}
#endif

#endif
