// Copyright 2026 The toric-cartier Authors
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

#ifndef TORIC_TORIC_H
#define TORIC_TORIC_H

/* C interface to the toric Zariski-de Rham / Cartier library.
 *
 * Objects are opaque handles. Every function that can fail returns a
 * toric_status; on failure the message is available from toric_last_error()
 * on the same thread. Report strings are allocated by the library and must be
 * released with toric_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TORIC_BUILDING_LIBRARY)
#    define TORIC_API __declspec(dllexport)
#  else
#    define TORIC_API __declspec(dllimport)
#  endif
#else
#  define TORIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct toric_cone toric_cone;

typedef enum toric_status {
  TORIC_OK = 0,
  /* The computation ran and a verified property did not hold. */
  TORIC_VERIFICATION_FAILED = 1,
  TORIC_ERR_INVALID_ARGUMENT = 2,
  TORIC_ERR_PARSE = 3,
  TORIC_ERR_NOT_PRIME = 4,
  TORIC_ERR_NOT_POINTED = 5,
  TORIC_ERR_NOT_IN_CONE = 6,
  TORIC_ERR_NO_VERTEX = 7,
  TORIC_ERR_DIMENSION = 8,
  TORIC_ERR_INTERNAL = 9
} toric_status;

typedef enum toric_format {
  TORIC_FORMAT_TEXT = 0,
  TORIC_FORMAT_JSON = 1,
  TORIC_FORMAT_CSV = 2
} toric_format;

typedef enum toric_space {
  TORIC_SPACE_FROM_SPEC = -1, /* use the document's "space" field */
  TORIC_SPACE_N = 0,          /* rays generate sigma */
  TORIC_SPACE_M = 1           /* rays generate the dual cone */
} toric_space;

/* Pass as the form degree to report every a = 0..n. */
#define TORIC_ALL_FORMS (-1)

TORIC_API const char* toric_version(void);
TORIC_API const char* toric_status_name(toric_status status);
TORIC_API const char* toric_last_error(void);
TORIC_API void toric_string_free(char* s);

/* Cone construction from the JSON cone document. */
TORIC_API toric_status toric_cone_from_json(const char* json, toric_space space,
                                            toric_cone** out);
/* rays: ray_count rows of rank entries, row-major. */
TORIC_API toric_status toric_cone_from_rays(size_t rank, const int64_t* rays, size_t ray_count,
                                            toric_space space, toric_cone** out);
TORIC_API void toric_cone_free(toric_cone* cone);
TORIC_API size_t toric_cone_rank(const toric_cone* cone);
TORIC_API int toric_cone_is_pointed(const toric_cone* cone);
TORIC_API int toric_cone_dual_has_vertex(const toric_cone* cone);

/* dim H^a of the degree-m complex for a = 0..rank, written to dims[0..rank].
 * p = 0 selects the rationals. */
TORIC_API toric_status toric_degree_cohomology(const toric_cone* cone, const int64_t* degree,
                                               size_t len, uint32_t p, size_t* dims,
                                               size_t dims_len);

/* Reports. threads = 0 uses TORIC_THREADS or the hardware concurrency.
 * TORIC_OK and TORIC_VERIFICATION_FAILED both produce *out. */
TORIC_API toric_status toric_dual(const toric_cone* cone, toric_format format, char** out);
TORIC_API toric_status toric_facets(const toric_cone* cone, toric_format format, char** out);
TORIC_API toric_status toric_vm(const toric_cone* cone, const int64_t* degree, size_t len,
                                uint32_t p, toric_format format, char** out);
TORIC_API toric_status toric_cohomology(const toric_cone* cone, uint32_t p, long bound, int a,
                                        toric_format format, unsigned threads, char** out);
TORIC_API toric_status toric_poincare(const toric_cone* cone, long bound, toric_format format,
                                      unsigned threads, char** out);
TORIC_API toric_status toric_cartier(const toric_cone* cone, uint32_t p, long bound, int a,
                                     toric_format format, unsigned threads, char** out);
TORIC_API toric_status toric_oracle(const toric_cone* cone, uint32_t p, long bound,
                                    toric_format format, unsigned threads, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TORIC_TORIC_H */
