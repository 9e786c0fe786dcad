/*
 * Copyright 2026 The skewen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the skewen library: skew-adjacency spectra, characteristic
 * polynomial coefficients and skew energy of oriented graphs, plus the
 * exhaustive unicyclic search and claim verification.
 *
 * Conventions
 *   - Every fallible call returns skw_status; on failure skw_last_error()
 *     holds a message for the calling thread until its next failing call.
 *   - Handles are opaque and owned by the caller; release them with the
 *     matching *_free function (NULL is accepted).
 *   - Array outputs follow one pattern: up to `capacity` entries are written
 *     to `out`, `*length` receives the full length, and
 *     SKW_ERR_BUFFER_TOO_SMALL is returned when capacity < length. Pass
 *     capacity 0 (out may be NULL) to query the length.
 *   - String outputs work the same way; lengths include the terminating NUL.
 *   - Borrowed pointers inside info structs stay valid until the owning
 *     handle is freed.
 */

#ifndef SKEWEN_SKEWEN_H
#define SKEWEN_SKEWEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(SKW_BUILDING_LIBRARY)
#define SKW_API __attribute__((visibility("default")))
#else
#define SKW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skw_status {
  SKW_OK = 0,
  SKW_ERR_INVALID_ARGUMENT = 1, /* bad parameter, NULL pointer, out of range */
  SKW_ERR_PARSE = 2,            /* malformed graph text */
  SKW_ERR_DOMAIN = 3,           /* graph outside the operation's class */
  SKW_ERR_INVARIANT = 4,        /* a mathematical invariant failed */
  SKW_ERR_BUFFER_TOO_SMALL = 5,
  SKW_ERR_INTERNAL = 6
} skw_status;

typedef enum skw_sign { SKW_SIGN_PLUS = 0, SKW_SIGN_MINUS = 1 } skw_sign;

typedef enum skw_family {
  SKW_FAMILY_PATH = 0,
  SKW_FAMILY_CYCLE = 1,
  SKW_FAMILY_PNL = 2, /* cycle C_l joined to an end of the path P_{n-l} */
  SKW_FAMILY_SNL = 3  /* n-l pendant vertices on one vertex of C_l */
} skw_family;

typedef enum skw_closed_family {
  SKW_CLOSED_SNL = 0,
  SKW_CLOSED_SN3 = 1,
  SKW_CLOSED_CYCLE = 2
} skw_closed_family;

typedef enum skw_engine {
  SKW_ENGINE_COMBINATORIAL = 0,
  SKW_ENGINE_UNICYCLIC = 1,
  SKW_ENGINE_EXACT = 2
} skw_engine;

typedef enum skw_objective { SKW_OBJECTIVE_MIN = 0, SKW_OBJECTIVE_MAX = 1 } skw_objective;

typedef enum skw_order {
  SKW_ORDER_EQUAL = 0,
  SKW_ORDER_GREATER = 1,
  SKW_ORDER_LESS = 2,
  SKW_ORDER_INCOMPARABLE = 3
} skw_order;

/* A simple graph, optionally carrying an orientation of every edge. */
typedef struct skw_graph skw_graph;
typedef struct skw_search skw_search;
typedef struct skw_report skw_report;

typedef struct skw_energy_report {
  double spectral;
  double coulson;
  double tolerance;
  int agreement;
} skw_energy_report;

typedef struct skw_record_info {
  int group; /* 1-based tie group */
  skw_sign sign;
  int girth;
  double energy;
  const char* label;         /* e.g. "S_6^4-"; borrowed */
  const char* canonical_key; /* isomorphism certificate; borrowed */
  const int64_t* coeffs;     /* b_0, b_2, ...; borrowed */
  size_t coeff_count;
} skw_record_info;

typedef struct skw_claim_info {
  const char* name;
  const char* expected;
  const char* observed;
  int pass;
} skw_claim_info;

SKW_API const char* skw_version(void);
SKW_API const char* skw_status_string(skw_status status);
SKW_API const char* skw_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

/* Parses the text graph format ("n m" header, then "u > v" / "u - v"
 * lines). The result is oriented iff every edge line is an arc. */
SKW_API skw_status skw_graph_parse(const char* text, size_t length, skw_graph** out);
SKW_API skw_status skw_graph_from_arcs(int n, const int* tails, const int* heads, size_t count,
                                       skw_graph** out);
SKW_API skw_status skw_graph_from_edges(int n, const int* us, const int* vs, size_t count, skw_graph** out);
/* girth <= 0 means "not given". */
SKW_API skw_status skw_graph_family(skw_family kind, int n, int girth, skw_graph** out);
SKW_API void skw_graph_free(skw_graph* graph);

SKW_API int skw_graph_order(const skw_graph* graph);
SKW_API int skw_graph_edge_count(const skw_graph* graph);
SKW_API int skw_graph_is_oriented(const skw_graph* graph);
/* Arc `index` (tail, head) of an oriented graph, or edge (u < v) otherwise. */
SKW_API skw_status skw_graph_arc(const skw_graph* graph, int index, int* tail, int* head);
/* *out = 0 for forests. */
SKW_API skw_status skw_graph_girth(const skw_graph* graph, int* out);
SKW_API skw_status skw_graph_is_unicyclic(const skw_graph* graph, int* out);
/* "C_n", "S_n^l", "P_n^l", or "" when the graph is none of these. */
SKW_API skw_status skw_graph_family_name(const skw_graph* graph, char* out, size_t capacity, size_t* length);
SKW_API skw_status skw_graph_serialize(const skw_graph* graph, char* out, size_t capacity, size_t* length);

/* ---- orientations ------------------------------------------------------ */

SKW_API skw_status skw_graph_orient_unicyclic(const skw_graph* graph, skw_sign sign, skw_graph** out);
/* Edge i points from the larger to the smaller endpoint iff bit i is set. */
SKW_API skw_status skw_graph_orient_mask(const skw_graph* graph, uint64_t mask, skw_graph** out);
SKW_API skw_status skw_graph_switch(const skw_graph* graph, const int* vertices, size_t count, skw_graph** out);
SKW_API skw_status skw_graph_switching_equivalent(const skw_graph* a, const skw_graph* b, int* out);

/* ---- coefficients ------------------------------------------------------ */

SKW_API skw_status skw_matching_counts(const skw_graph* graph, int64_t* out, size_t capacity, size_t* length);
SKW_API skw_status skw_coeffs(const skw_graph* graph, skw_engine engine, int64_t* out, size_t capacity,
                              size_t* length);
SKW_API skw_status skw_family_coeffs(skw_closed_family family, int n, int girth, skw_sign sign, int64_t* out,
                                     size_t capacity, size_t* length);
SKW_API skw_status skw_verify_pendant_recurrence(const skw_graph* graph, int u, int v, int* holds);
SKW_API skw_status skw_quasi_compare(const int64_t* lhs, const int64_t* rhs, size_t length, skw_order* out);

/* ---- energy ------------------------------------------------------------ */

SKW_API skw_status skw_spectrum(const skw_graph* graph, double* out, size_t capacity, size_t* length);
SKW_API skw_status skw_energy_spectral(const skw_graph* graph, double* out);
SKW_API skw_status skw_energy_coulson(const skw_graph* graph, double tolerance, double* out);
SKW_API skw_status skw_energy_report_compute(const skw_graph* graph, double tolerance, skw_energy_report* out);
SKW_API skw_status skw_quartic_energy(int64_t b2, int64_t b4, double* out);

/* ---- enumeration, search, verification --------------------------------- */

SKW_API skw_status skw_count_unicyclic(int n, int dedupe, uint64_t* out);

SKW_API skw_status skw_search_extremal(int n, skw_objective objective, int top, skw_search** out);
SKW_API size_t skw_search_size(const skw_search* search);
SKW_API skw_status skw_search_record(const skw_search* search, size_t index, skw_record_info* out);
/* The record's canonically oriented graph; free with skw_graph_free. */
SKW_API skw_status skw_search_graph(const skw_search* search, size_t index, skw_graph** out);
SKW_API void skw_search_free(skw_search* search);

SKW_API skw_status skw_verify_claims(int n, skw_report** out);
SKW_API int skw_report_order(const skw_report* report);
SKW_API size_t skw_report_size(const skw_report* report);
SKW_API skw_status skw_report_claim(const skw_report* report, size_t index, skw_claim_info* out);
SKW_API int skw_report_all_pass(const skw_report* report);
SKW_API void skw_report_free(skw_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SKEWEN_SKEWEN_H */
