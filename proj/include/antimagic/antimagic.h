// Copyright 2026 The antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANTIMAGIC_ANTIMAGIC_H_
#define ANTIMAGIC_ANTIMAGIC_H_

// C interface to the antimagic library. Objects are opaque handles owned by
// the caller and released with the matching *_free function. Every fallible
// call returns an am_status; on failure am_last_error() describes it and
// output parameters are left untouched. Strings returned through char**
// are released with am_string_free.

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AM_API __declspec(dllexport)
#else
#define AM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum am_status {
  AM_OK = 0,
  AM_ERR_INVALID_ARGUMENT = 1,
  AM_ERR_PARSE = 2,
  AM_ERR_OUT_OF_RANGE = 3,
  AM_ERR_DUPLICATE_EDGE = 4,
  AM_ERR_NOT_REGULAR = 5,
  AM_ERR_DEGREE_TOO_SMALL = 6,
  AM_ERR_INCOMPLETE_LABELING = 7,
  AM_ERR_NOT_BIJECTIVE = 8,
  AM_ERR_BUDGET_EXHAUSTED = 9,
  AM_ERR_REPAIR_FAILED = 10,
  AM_ERR_GENERATION_FAILED = 11,
  AM_ERR_INSTANCE_TOO_LARGE = 12,
  AM_ERR_INTERNAL = 13
} am_status;

typedef enum am_format {
  AM_FORMAT_EDGELIST = 0,
  AM_FORMAT_JSON = 1,
  AM_FORMAT_DOT = 2
} am_format;

typedef struct am_graph am_graph;
typedef struct am_labeling am_labeling;

// Message for the last failed call on this thread ("" if none).
AM_API const char* am_last_error(void);
AM_API const char* am_status_name(am_status status);
AM_API void am_string_free(char* s);

// Graphs.
AM_API am_status am_graph_parse(const char* text, am_graph** out);
AM_API am_status am_graph_generate(uint32_t n, uint32_t k, uint64_t seed,
                                   am_graph** out);
// family: "cycle", "complete_bipartite", "hypercube3" or "crown".
AM_API am_status am_graph_named(const char* family, uint32_t n, am_graph** out);
AM_API void am_graph_free(am_graph* graph);
AM_API uint32_t am_graph_part_size(const am_graph* graph);
AM_API uint32_t am_graph_degree(const am_graph* graph);
AM_API size_t am_graph_edge_count(const am_graph* graph);
// labeling may be NULL; otherwise it must be complete.
AM_API am_status am_graph_export(const am_graph* graph,
                                 const am_labeling* labeling, am_format format,
                                 char** out);

// Labelings. Labels are indexed by edge id (the order of the edge list).
AM_API am_status am_labeling_parse(const am_graph* graph, const char* text,
                                   am_labeling** out);
AM_API am_status am_labeling_from_array(const uint32_t* labels, size_t count,
                                        am_labeling** out);
AM_API void am_labeling_free(am_labeling* labeling);
AM_API size_t am_labeling_size(const am_labeling* labeling);
AM_API uint32_t am_labeling_get(const am_labeling* labeling, size_t edge);

// Builds an antimagic labeling. report_json, when not NULL, receives the
// construction route, per-stage checks and bad vertices as JSON.
AM_API am_status am_label(const am_graph* graph, int allow_repair,
                          am_labeling** out, char** report_json);

// Sets *antimagic to 1 or 0. report_json, when not NULL, receives the
// conflict list as JSON.
AM_API am_status am_verify(const am_graph* graph, const am_labeling* labeling,
                           int* antimagic, char** report_json);

// 1-factorization and the cycles of each consecutive pair of factors, JSON.
AM_API am_status am_factor(const am_graph* graph, char** json);

// Exhaustive search. *found is 0 when the space holds no antimagic
// labeling, in which case *out is set to NULL.
AM_API am_status am_oracle_search(const am_graph* graph, uint64_t budget,
                                  am_labeling** out, int* found);
AM_API am_status am_oracle_count(const am_graph* graph, uint64_t* count);

// The worked small examples as one JSON document.
AM_API am_status am_demo(char** json);

#ifdef __cplusplus
}
#endif

#endif  // ANTIMAGIC_ANTIMAGIC_H_
