// Copyright 2026 The mincone Authors
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

/*
 * C interface to mincone: exact minimum-cardinality generators of finitely
 * generated convex cones.
 *
 * Conventions:
 *  - Objects are opaque handles created by a mincone_* constructor and
 *    released with the matching *_destroy function. Destroying NULL is a no-op.
 *  - Rationals cross the boundary as text: "p", "-p" or "p/q".
 *  - Strings returned through `char** out` are heap allocated and must be
 *    released with mincone_string_free.
 *  - Fallible calls return a mincone_status. On failure, mincone_last_error()
 *    describes the problem for the calling thread.
 *  - Handles are immutable after construction except through
 *    mincone_genset_append; distinct handles may be used from different
 *    threads concurrently.
 */

#ifndef MINCONE_H
#define MINCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MINCONE_API __declspec(dllexport)
#else
#define MINCONE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mincone_status {
  MINCONE_OK = 0,
  MINCONE_ERROR_PARSE = 1,
  MINCONE_ERROR_DIMENSION = 2,
  MINCONE_ERROR_INVALID_ARGUMENT = 3,
  MINCONE_ERROR_OUT_OF_RANGE = 4,
  MINCONE_ERROR_LIMIT = 5,
  MINCONE_ERROR_INTERNAL = 6
} mincone_status;

MINCONE_API const char* mincone_status_name(mincone_status status);

/* Message of the most recent failing call on this thread ("" if none). */
MINCONE_API const char* mincone_last_error(void);
/* 1-based line of the most recent cone-file parse error on this thread, 0 otherwise. */
MINCONE_API size_t mincone_last_error_line(void);

MINCONE_API void mincone_string_free(char* s);

/* ---- generator sets ---------------------------------------------------- */

typedef struct mincone_genset mincone_genset;

MINCONE_API mincone_status mincone_genset_create(size_t dim, mincone_genset** out);
/* Parses the text cone format ("n m" header, m rows of n rationals, '#' comments). */
MINCONE_API mincone_status mincone_genset_parse(const char* text, mincone_genset** out);
MINCONE_API void mincone_genset_destroy(mincone_genset* set);

/* Appends one generator given as whitespace- or comma-separated rationals. */
MINCONE_API mincone_status mincone_genset_append(mincone_genset* set, const char* row);

MINCONE_API size_t mincone_genset_dim(const mincone_genset* set);
MINCONE_API size_t mincone_genset_size(const mincone_genset* set);
MINCONE_API mincone_status mincone_genset_entry(const mincone_genset* set, size_t row, size_t col,
                                                char** out);
/* Serializes in the text cone format; the output parses back to the same set. */
MINCONE_API mincone_status mincone_genset_format(const mincone_genset* set, char** out);
MINCONE_API mincone_status mincone_genset_digest(const mincone_genset* set, char** out);

/* ---- membership -------------------------------------------------------- */

typedef struct mincone_membership mincone_membership;

/* Decides whether `point` lies in cone(set). Either branch carries an exact
 * certificate: coefficients lambda >= 0 (one per generator) with
 * sum lambda_i s_i = point, or a Farkas vector z (one entry per coordinate)
 * with <s_i, z> <= 0 for every generator and <point, z> > 0. */
MINCONE_API mincone_status mincone_member(const mincone_genset* set, const char* point,
                                          mincone_membership** out);
MINCONE_API void mincone_membership_destroy(mincone_membership* m);
MINCONE_API int mincone_membership_is_member(const mincone_membership* m);
MINCONE_API size_t mincone_membership_certificate_size(const mincone_membership* m);
MINCONE_API mincone_status mincone_membership_certificate_entry(const mincone_membership* m,
                                                                size_t i, char** out);

/* ---- conic-independence reduction -------------------------------------- */

typedef struct mincone_reduction mincone_reduction;

MINCONE_API mincone_status mincone_reduce(const mincone_genset* set, mincone_reduction** out);
MINCONE_API void mincone_reduction_destroy(mincone_reduction* r);
/* Borrowed; valid until the reduction is destroyed. */
MINCONE_API const mincone_genset* mincone_reduction_output(const mincone_reduction* r);
MINCONE_API size_t mincone_reduction_kept_count(const mincone_reduction* r);
MINCONE_API mincone_status mincone_reduction_kept_index(const mincone_reduction* r, size_t i,
                                                        size_t* index);
MINCONE_API size_t mincone_reduction_removed_count(const mincone_reduction* r);
MINCONE_API mincone_status mincone_reduction_removed_index(const mincone_reduction* r, size_t i,
                                                           size_t* index);
/* Certificate for the i-th removal: nonzero coefficients keyed by input index. */
MINCONE_API mincone_status mincone_reduction_removed_term_count(const mincone_reduction* r,
                                                                size_t i, size_t* count);
MINCONE_API mincone_status mincone_reduction_removed_term(const mincone_reduction* r, size_t i,
                                                          size_t term, size_t* generator,
                                                          char** coefficient);

/* ---- minimum generators ------------------------------------------------ */

/* `jobs` > 1 runs the lineality membership tests on that many threads; the
 * output never depends on it. `lineality_dim` may be NULL. */
MINCONE_API mincone_status mincone_minimize(const mincone_genset* set, unsigned jobs,
                                            mincone_genset** out, size_t* lineality_dim);

/* ---- lineality decomposition ------------------------------------------- */

typedef struct mincone_decomposition mincone_decomposition;

typedef enum mincone_part {
  MINCONE_PART_LINEAL = 0,
  MINCONE_PART_CONIC = 1,
  MINCONE_PART_BASIS = 2
} mincone_part;

MINCONE_API mincone_status mincone_decompose(const mincone_genset* set, unsigned jobs,
                                             mincone_decomposition** out);
MINCONE_API void mincone_decomposition_destroy(mincone_decomposition* d);
MINCONE_API size_t mincone_decomposition_lineality_dim(const mincone_decomposition* d);
MINCONE_API size_t mincone_decomposition_part_size(const mincone_decomposition* d, mincone_part part);
MINCONE_API mincone_status mincone_decomposition_part_index(const mincone_decomposition* d,
                                                            mincone_part part, size_t i,
                                                            size_t* index);
/* Conic part projected onto the orthogonal complement of the lineality
 * space, one row per conic index. Borrowed. */
MINCONE_API const mincone_genset* mincone_decomposition_projected(const mincone_decomposition* d);

/* ---- minimality verification ------------------------------------------- */

typedef struct mincone_verify_report mincone_verify_report;

typedef enum mincone_verify_list {
  MINCONE_LIST_MISSING = 0,    /* input generators outside cone(candidate) */
  MINCONE_LIST_EXTRANEOUS = 1, /* candidate generators outside cone(input) */
  MINCONE_LIST_REDUNDANT = 2   /* candidate generators in the cone of the others */
} mincone_verify_list;

/* Checks that `candidate` generates cone(input) with minimum cardinality.
 * Pointed inputs with at most `bruteforce_cap` generators are also checked
 * against exhaustive subset search (cap 0 disables it). */
MINCONE_API mincone_status mincone_verify(const mincone_genset* input,
                                          const mincone_genset* candidate, size_t bruteforce_cap,
                                          mincone_verify_report** out);
MINCONE_API void mincone_verify_report_destroy(mincone_verify_report* r);
MINCONE_API int mincone_verify_passed(const mincone_verify_report* r);
MINCONE_API int mincone_verify_generates(const mincone_verify_report* r);
MINCONE_API size_t mincone_verify_candidate_size(const mincone_verify_report* r);
MINCONE_API size_t mincone_verify_expected_size(const mincone_verify_report* r);
MINCONE_API size_t mincone_verify_lineality_dim(const mincone_verify_report* r);
/* Returns 1 and sets *size when the exhaustive search ran. */
MINCONE_API int mincone_verify_bruteforce_size(const mincone_verify_report* r, size_t* size);
MINCONE_API size_t mincone_verify_list_size(const mincone_verify_report* r, mincone_verify_list list);
MINCONE_API mincone_status mincone_verify_list_index(const mincone_verify_report* r,
                                                     mincone_verify_list list, size_t i,
                                                     size_t* index);

/* ---- random instances -------------------------------------------------- */

typedef struct mincone_instance_spec {
  size_t ambient_dim;
  size_t generator_count;
  size_t lineality_dim;
  uint64_t seed;
  int64_t coefficient_bound;
  int nonnegative;
} mincone_instance_spec;

/* Deterministic for a fixed spec. `measured_lineality_dim` may be NULL. */
MINCONE_API mincone_status mincone_random(const mincone_instance_spec* spec, mincone_genset** out,
                                          size_t* measured_lineality_dim);

/* ---- rationals --------------------------------------------------------- */

/* Lossy decimal rendering with `digits` fractional digits. */
MINCONE_API mincone_status mincone_rational_decimal(const char* rational, int digits, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MINCONE_H */
