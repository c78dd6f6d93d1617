// Copyright 2026 The portraitmap Authors
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
 * C interface to the portraitmap library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a pm_status; on
 * failure the output arguments are untouched and pm_last_error() holds a
 * one-line diagnostic for the calling thread.
 *
 * Matrix entries are exchanged as interleaved (re, im) doubles in row-major
 * order. Factor positions (keep lists) are 0-based.
 */
#ifndef PORTRAIT_PORTRAIT_H
#define PORTRAIT_PORTRAIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PORTRAITMAP_BUILDING)
#    define PM_API __declspec(dllexport)
#  else
#    define PM_API __declspec(dllimport)
#  endif
#else
#  define PM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
  PM_OK = 0,
  PM_ERR_NON_FINITE = 1,
  PM_ERR_NOT_SQUARE = 2,
  PM_ERR_NOT_HERMITIAN = 3,
  PM_ERR_NOT_PSD = 4,
  PM_ERR_NOT_UNIT_TRACE = 5,
  PM_ERR_NOT_DENSITY = 6,
  PM_ERR_NO_CONVERGENCE = 7,
  PM_ERR_DOMAIN = 8,
  PM_ERR_DIMENSION_MISMATCH = 9,
  PM_ERR_SPEC_TOO_SMALL = 10,
  PM_ERR_EMPTY_KEEP = 11,
  PM_ERR_ZERO_TRACE = 12,
  PM_ERR_SHIFT_TOO_SMALL = 13,
  PM_ERR_INVALID_ARGUMENT = 14,
  PM_ERR_PARSE = 15,
  PM_ERR_IO = 16,
  PM_ERR_INTERNAL = 99
} pm_status;

typedef enum pm_level {
  PM_LEVEL_HERMITIAN = 0,
  PM_LEVEL_PSD = 1,
  PM_LEVEL_DENSITY = 2
} pm_level;

typedef struct pm_matrix pm_matrix;
typedef struct pm_report pm_report;
typedef struct pm_generator pm_generator;

typedef struct pm_mutinfo {
  double value;
  double entropy_joint;
  double entropy_part1;
  double entropy_part2;
} pm_mutinfo;

PM_API const char* pm_version(void);
PM_API const char* pm_status_name(pm_status status);
PM_API const char* pm_last_error(void);

/* ---- matrices ---------------------------------------------------------- */

PM_API pm_status pm_matrix_create(size_t rows, size_t cols, const double* re_im,
                                  pm_matrix** out);
PM_API pm_status pm_matrix_identity(size_t dim, pm_matrix** out);
PM_API pm_status pm_matrix_clone(const pm_matrix* m, pm_matrix** out);
PM_API void pm_matrix_free(pm_matrix* m);
PM_API size_t pm_matrix_rows(const pm_matrix* m);
PM_API size_t pm_matrix_cols(const pm_matrix* m);
PM_API pm_status pm_matrix_get(const pm_matrix* m, size_t row, size_t col,
                               double* re, double* im);
/* Copies rows*cols interleaved pairs into `re_im` (capacity in doubles). */
PM_API pm_status pm_matrix_copy_data(const pm_matrix* m, double* re_im,
                                     size_t capacity);
PM_API pm_status pm_matrix_trace(const pm_matrix* m, double* re, double* im);

PM_API pm_status pm_matrix_read_file(const char* path, pm_matrix** out);
PM_API pm_status pm_matrix_write_file(const pm_matrix* m, const char* path);
PM_API pm_status pm_matrix_parse_json(const char* text, pm_matrix** out);
/* Returns a malloc'd NUL-terminated MatrixFile document; free with pm_string_free. */
PM_API pm_status pm_matrix_to_json(const pm_matrix* m, char** out);
PM_API void pm_string_free(char* s);

/* ---- hermitian core ---------------------------------------------------- */

PM_API pm_status pm_validate(const pm_matrix* m, pm_level level);
/* Ascending; `out` must hold dim doubles. */
PM_API pm_status pm_eigenvalues(const pm_matrix* m, double* out, size_t capacity);
PM_API pm_status pm_min_eigenvalue(const pm_matrix* m, double* out);
PM_API pm_status pm_kron(const pm_matrix* b, const pm_matrix* c, pm_matrix** out);

/* ---- portrait maps ----------------------------------------------------- */

PM_API pm_status pm_block_trace_map(const pm_matrix* a, size_t n, size_t m,
                                    pm_matrix** out);
PM_API pm_status pm_diagonal_block_sum(const pm_matrix* a, size_t n, size_t m,
                                       pm_matrix** out);
PM_API pm_status pm_embed(const pm_matrix* a, size_t target_dim, size_t offset,
                          pm_matrix** out);
PM_API pm_status pm_shift(const pm_matrix* a, double x, pm_matrix** out);
PM_API pm_status pm_chain_portrait(const pm_matrix* a, const size_t* radices,
                                   size_t num_radices, const size_t* keep,
                                   size_t num_keep, pm_matrix** out);

/* ---- entropies and inequality checks ----------------------------------- */

PM_API pm_status pm_entropy(const pm_matrix* a, double* out);
PM_API pm_status pm_mutual_information(const pm_matrix* a, size_t n, size_t m,
                                       pm_mutinfo* out);
PM_API pm_status pm_mutual_information_embedded(const pm_matrix* a, size_t n,
                                                size_t m, pm_mutinfo* out);

PM_API pm_status pm_check_subadditivity(const pm_matrix* a, size_t n, size_t m,
                                        double tol, pm_report** out);
PM_API pm_status pm_check_padded_subadditivity(const pm_matrix* a,
                                               size_t target_dim, size_t offset,
                                               size_t n, size_t m, double tol,
                                               pm_report** out);
PM_API pm_status pm_check_scaled(const pm_matrix* a, size_t n, size_t m,
                                 double tol, pm_report** out);
PM_API pm_status pm_check_shifted(const pm_matrix* a, size_t target_dim,
                                  size_t offset, size_t n, size_t m, double x,
                                  double tol, pm_report** out);
PM_API pm_status pm_check_ssa(const pm_matrix* a, size_t n1, size_t n2, size_t n3,
                              double tol, pm_report** out);

PM_API void pm_report_free(pm_report* r);
PM_API const char* pm_report_name(const pm_report* r);
PM_API double pm_report_lhs(const pm_report* r);
PM_API double pm_report_rhs(const pm_report* r);
PM_API double pm_report_slack(const pm_report* r);
PM_API double pm_report_tolerance(const pm_report* r);
PM_API int pm_report_satisfied(const pm_report* r);
PM_API size_t pm_report_term_count(const pm_report* r);
PM_API pm_status pm_report_term(const pm_report* r, size_t index,
                                const char** label, double* value);

/* ---- random generation ------------------------------------------------- */

PM_API pm_status pm_generator_create(uint64_t seed, uint64_t stream,
                                     pm_generator** out);
PM_API void pm_generator_free(pm_generator* g);
/* Uniform draw on [0, 1) from the generator's stream. */
PM_API pm_status pm_generator_uniform(pm_generator* g, double* out);
PM_API pm_status pm_gen_haar_unitary(pm_generator* g, size_t dim, pm_matrix** out);
PM_API pm_status pm_gen_pure_density(pm_generator* g, size_t dim, pm_matrix** out);
PM_API pm_status pm_gen_mixed_density(pm_generator* g, size_t dim, pm_matrix** out);
PM_API pm_status pm_gen_hermitian(pm_generator* g, size_t dim, double scale,
                                  pm_matrix** out);
PM_API pm_status pm_gen_separable(pm_generator* g, size_t n, size_t m,
                                  size_t terms, pm_matrix** out);

/* ---- brute-force oracle ------------------------------------------------ */

PM_API pm_status pm_oracle_portrait(const pm_matrix* a, size_t n, size_t m,
                                    pm_matrix** a1, pm_matrix** a2);
PM_API pm_status pm_oracle_chain_portrait(const pm_matrix* a,
                                          const size_t* radices,
                                          size_t num_radices, const size_t* keep,
                                          size_t num_keep, pm_matrix** out);
PM_API pm_status pm_oracle_embed_shift(const pm_matrix* a, size_t target_dim,
                                       size_t offset, double x, pm_matrix** out);
PM_API pm_status pm_oracle_entropy(const pm_matrix* a, double* out);

#ifdef __cplusplus
}
#endif

#endif /* PORTRAIT_PORTRAIT_H */
