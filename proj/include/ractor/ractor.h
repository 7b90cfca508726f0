/* SPDX-License-Identifier: Apache-2.0 */
#ifndef RACTOR_RACTOR_H
#define RACTOR_RACTOR_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef RACTOR_BUILDING_LIBRARY
#    define RACTOR_API __declspec(dllexport)
#  else
#    define RACTOR_API __declspec(dllimport)
#  endif
#else
#  define RACTOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ractor_status {
  RACTOR_OK = 0,
  RACTOR_ERR_ARGUMENT = 1,    /* null handle, bad enum, p < 1 */
  RACTOR_ERR_INPUT = 2,       /* unreadable or malformed file, unknown builtin */
  RACTOR_ERR_NO_SOLUTION = 3, /* no admissible colouring */
  RACTOR_ERR_STATE = 4,       /* base case lacks what the call needs */
  RACTOR_ERR_DISCONNECTED = 5,
  RACTOR_ERR_INTERNAL = 6
} ractor_status;

typedef enum ractor_method {
  RACTOR_METHOD_RS = 0,
  RACTOR_METHOD_CELLS = 1,
  RACTOR_METHOD_BOTH = 2
} ractor_method;

typedef struct ractor_polytope ractor_polytope;
typedef struct ractor_coloring ractor_coloring;
typedef struct ractor_base ractor_base;
typedef struct ractor_homology ractor_homology;

RACTOR_API const char* ractor_version(void);
/* Message of the last failed call on this thread; never null. */
RACTOR_API const char* ractor_last_error(void);
RACTOR_API void ractor_string_free(char* s);

/* source: "builtin:<name>" or a JSON file path. */
RACTOR_API ractor_status ractor_polytope_load(const char* source, ractor_polytope** out);
RACTOR_API ractor_status ractor_polytope_from_json(const char* text, ractor_polytope** out);
RACTOR_API size_t ractor_polytope_facet_count(const ractor_polytope* p);
RACTOR_API void ractor_polytope_free(ractor_polytope* p);

RACTOR_API ractor_status ractor_coloring_search(const ractor_polytope* p, ractor_coloring** out);
RACTOR_API ractor_status ractor_coloring_load(const ractor_polytope* p, const char* path, ractor_coloring** out);
RACTOR_API ractor_status ractor_coloring_from_json(const ractor_polytope* p, const char* text,
                                                   ractor_coloring** out);
RACTOR_API ractor_status ractor_coloring_to_json(const ractor_coloring* c, char** out);
RACTOR_API void ractor_coloring_free(ractor_coloring* c);

/* coloring may be null: one is searched for. A returned base may still have
   failed checks; see ractor_base_passed. */
RACTOR_API ractor_status ractor_base_verify(const ractor_polytope* p, const ractor_coloring* c,
                                            ractor_base** out);
RACTOR_API int ractor_base_passed(const ractor_base* b);
RACTOR_API size_t ractor_base_check_count(const ractor_base* b);
/* Borrowed strings valid for the life of b. */
RACTOR_API const char* ractor_base_check_name(const ractor_base* b, size_t i);
RACTOR_API int ractor_base_check_passed(const ractor_base* b, size_t i);
RACTOR_API const char* ractor_base_check_detail(const ractor_base* b, size_t i);
RACTOR_API ractor_status ractor_base_certificate_json(const ractor_base* b, char** out);
RACTOR_API void ractor_base_free(ractor_base* b);

/* Safe to call concurrently on one base. */
RACTOR_API ractor_status ractor_cover_homology(const ractor_base* b, size_t p, ractor_method method,
                                               unsigned threads, ractor_homology** out);
RACTOR_API size_t ractor_homology_p(const ractor_homology* h);
RACTOR_API size_t ractor_homology_index(const ractor_homology* h);
RACTOR_API int ractor_homology_involutions(const ractor_homology* h);
/* which: RACTOR_METHOD_RS or RACTOR_METHOD_CELLS; 0 if it was not computed. */
RACTOR_API int ractor_homology_has(const ractor_homology* h, ractor_method which);
RACTOR_API size_t ractor_homology_betti(const ractor_homology* h, ractor_method which);
RACTOR_API size_t ractor_homology_two_rank(const ractor_homology* h, ractor_method which);
/* Invariant factors joined by ';' (empty string if none). */
RACTOR_API ractor_status ractor_homology_factors(const ractor_homology* h, ractor_method which, char** out);
RACTOR_API int ractor_homology_agree(const ractor_homology* h);
/* Euler characteristic of the cover; needs the cellular method. */
RACTOR_API ractor_status ractor_homology_euler(const ractor_homology* h, long* out);
RACTOR_API size_t ractor_homology_elapsed_ms(const ractor_homology* h);
RACTOR_API void ractor_homology_free(ractor_homology* h);

#ifdef __cplusplus
}
#endif

#endif
