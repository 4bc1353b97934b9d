// Copyright 2026 The Shatter Authors
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

/* C interface to the shatter library.
 *
 * Families and trees are opaque handles owned by the caller and released with
 * the matching *_free function. Strings returned through `char** out` are
 * allocated by the library and released with shatter_string_free. Every call
 * returns a status; on failure shatter_last_error() describes it (per thread).
 */
#ifndef SHATTER_SHATTER_H
#define SHATTER_SHATTER_H

#include <stddef.h>
#include <stdint.h>

#if defined(SHATTER_BUILDING_LIBRARY)
#define SHATTER_API __attribute__((visibility("default")))
#else
#define SHATTER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shatter_status {
  SHATTER_OK = 0,
  SHATTER_E_PARSE,
  SHATTER_E_EMPTY_FAMILY,
  SHATTER_E_INVALID_GROUND_SUBSET,
  SHATTER_E_ELEMENT_OUT_OF_RANGE,
  SHATTER_E_GROUND_SET_TOO_LARGE,
  SHATTER_E_PARAMETER_OUT_OF_RANGE,
  SHATTER_E_LAYER_VIOLATION,
  SHATTER_E_NOT_EXTREMAL,
  SHATTER_E_DISCONNECTED,
  SHATTER_E_INVALID_TREE,
  SHATTER_E_PRECONDITION_VIOLATED,
  SHATTER_E_NOT_A_SUBSET,
  SHATTER_E_ZERO_POLYNOMIAL,
  SHATTER_E_EXPONENT_OVERFLOW,
  SHATTER_E_VC_MISMATCH,
  SHATTER_E_DUPLICATE_E_VALUE,
  SHATTER_E_NON_UNIQUE_H,
  SHATTER_E_DISCONNECTED_LEVEL_GRAPH,
  /* A checked theorem failed. The report, if any, is still returned. */
  SHATTER_E_FALSIFIED,
  SHATTER_E_INVALID_ARGUMENT,
  SHATTER_E_INTERNAL,
} shatter_status;

typedef struct shatter_family shatter_family;
typedef struct shatter_tree shatter_tree;

typedef enum shatter_format {
  SHATTER_FORMAT_SS = 0,
  SHATTER_FORMAT_JSON = 1,
} shatter_format;

typedef enum shatter_method {
  SHATTER_METHOD_DEFINITION = 0,
  SHATTER_METHOD_BOLLOBAS_RADCLIFFE = 1,
  SHATTER_METHOD_STANDARD_MONOMIALS = 2,
} shatter_method;

typedef enum shatter_basis_mode {
  SHATTER_BASIS_ASSEMBLED = 0,
  SHATTER_BASIS_FULL = 1,
  SHATTER_BASIS_ADJACENT = 2,
} shatter_basis_mode;

/* Return nonzero to stop the enumeration early. */
typedef int (*shatter_family_callback)(const shatter_family* family, void* user);

SHATTER_API const char* shatter_last_error(void);
SHATTER_API const char* shatter_status_name(shatter_status status);
/* 1 for statuses that mean a consistency check failed, 0 otherwise. */
SHATTER_API int shatter_status_is_consistency_failure(shatter_status status);
SHATTER_API void shatter_string_free(char* s);

/* Families */
SHATTER_API shatter_status shatter_family_parse(const char* text, shatter_family** out);
SHATTER_API shatter_status shatter_family_read_file(const char* path, shatter_family** out);
SHATTER_API shatter_status shatter_family_from_masks(int n, const uint32_t* masks, size_t count,
                                                     shatter_family** out);
SHATTER_API void shatter_family_free(shatter_family* f);
SHATTER_API int shatter_family_ground_size(const shatter_family* f);
SHATTER_API size_t shatter_family_size(const shatter_family* f);
/* Copies min(size, capacity) masks in canonical order. */
SHATTER_API size_t shatter_family_masks(const shatter_family* f, uint32_t* out, size_t capacity);
SHATTER_API shatter_status shatter_family_emit(const shatter_family* f, shatter_format format, char** out);

/* Core quantities */
SHATTER_API shatter_status shatter_shattered(const shatter_family* f, shatter_family** out);
SHATTER_API shatter_status shatter_strongly_shattered(const shatter_family* f, shatter_family** out);
SHATTER_API shatter_status shatter_vc_dimension(const shatter_family* f, int* out);
SHATTER_API shatter_status shatter_is_extremal(const shatter_family* f, shatter_method method, int* out);
/* Analysis report as JSON; SHATTER_E_FALSIFIED when the verdicts disagree. */
SHATTER_API shatter_status shatter_analyze_json(const shatter_family* f, char** out);
SHATTER_API shatter_status shatter_graph_dot(const shatter_family* f, char** out);

/* Trees */
SHATTER_API shatter_status shatter_tree_parse(const char* text, shatter_tree** out);
SHATTER_API shatter_status shatter_tree_read_file(const char* path, shatter_tree** out);
SHATTER_API void shatter_tree_free(shatter_tree* t);
SHATTER_API shatter_status shatter_tree_emit(const shatter_tree* t, char** out);
SHATTER_API shatter_status shatter_tree_dot(const shatter_tree* t, char** out);
SHATTER_API shatter_status shatter_tree_encode(const shatter_family* f, shatter_tree** out);
/* n = 0 picks the largest label. */
SHATTER_API shatter_status shatter_tree_decode(const shatter_tree* t, int n, shatter_family** out);

/* Enumeration of VC-dim <= 1 extremal families with full support and empty
 * common intersection. `callback` may be NULL. SHATTER_E_FALSIFIED when the
 * count differs from 2^n (n+1)^(n-2). */
SHATTER_API shatter_status shatter_enumerate_vc1(int n, shatter_family_callback callback, void* user,
                                                 uint64_t* count);
SHATTER_API uint64_t shatter_vc1_count_formula(int n);

/* Algebra: `order` is a permutation of 1..n (NULL for the identity). */
SHATTER_API shatter_status shatter_groebner_json(const shatter_family* f, const int* order, size_t order_len,
                                                 shatter_basis_mode mode, char** out);

/* Projections: window 0 means 2t+1. */
SHATTER_API shatter_status shatter_project_json(const shatter_family* f, int t, int window, int relaxed,
                                                char** out);

/* Constructions */
SHATTER_API shatter_status shatter_construct_anstee(int n, int random_tree, uint64_t seed, shatter_family** out,
                                                    char** steps_json);
SHATTER_API shatter_status shatter_construct_fq(int n, int t, int l, shatter_family** out);
SHATTER_API shatter_status shatter_down_closure(const shatter_family* f, shatter_family** out);
SHATTER_API shatter_status shatter_peel_json(const shatter_family* f, char** out);
SHATTER_API shatter_status shatter_fq_peel_json(int n, int t, int l, char** out);
SHATTER_API shatter_status shatter_conjecture_json(int n, int exhaustive, uint64_t random_count, uint64_t seed,
                                                   unsigned jobs, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SHATTER_SHATTER_H */
