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

#include "portrait/portrait.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>
#include <vector>

#include "portrait/entropy.hpp"
#include "portrait/error.hpp"
#include "portrait/hermitian.hpp"
#include "portrait/maps.hpp"
#include "portrait/matrix_io.hpp"
#include "portrait/oracle.hpp"
#include "portrait/randgen.hpp"

struct pm_matrix {
  portrait::ComplexMatrix value;
};

struct pm_report {
  portrait::InequalityReport value;
};

struct pm_generator {
  portrait::SeededGenerator value;
};

namespace {

using portrait::Complex;
using portrait::ComplexMatrix;
using portrait::ErrorCode;

thread_local std::string last_error;

pm_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return PM_ERR_NON_FINITE;
    case ErrorCode::NotSquare: return PM_ERR_NOT_SQUARE;
    case ErrorCode::NotHermitian: return PM_ERR_NOT_HERMITIAN;
    case ErrorCode::NotPSD: return PM_ERR_NOT_PSD;
    case ErrorCode::NotUnitTrace: return PM_ERR_NOT_UNIT_TRACE;
    case ErrorCode::NotDensity: return PM_ERR_NOT_DENSITY;
    case ErrorCode::NoConvergence: return PM_ERR_NO_CONVERGENCE;
    case ErrorCode::DomainError: return PM_ERR_DOMAIN;
    case ErrorCode::DimensionMismatch: return PM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::SpecTooSmall: return PM_ERR_SPEC_TOO_SMALL;
    case ErrorCode::EmptyKeep: return PM_ERR_EMPTY_KEEP;
    case ErrorCode::ZeroTrace: return PM_ERR_ZERO_TRACE;
    case ErrorCode::ShiftTooSmall: return PM_ERR_SHIFT_TOO_SMALL;
    case ErrorCode::InvalidArgument: return PM_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return PM_ERR_PARSE;
    case ErrorCode::IoError: return PM_ERR_IO;
  }
  return PM_ERR_INTERNAL;
}

template <typename Fn>
pm_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return PM_OK;
  } catch (const portrait::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw portrait::Error(ErrorCode::InvalidArgument, what);
}

pm_matrix* wrap(ComplexMatrix m) { return new pm_matrix{std::move(m)}; }

portrait::HermitianMatrix hermitian(const pm_matrix* a) {
  require(a != nullptr, "null matrix");
  return portrait::validate_hermitian(a->value);
}

ComplexMatrix from_oracle(const portrait::oracle::SquareMatrix& m) {
  return ComplexMatrix(m.dim, m.dim, m.data);
}

pm_status emit_report(pm_report** out, const std::function<portrait::InequalityReport()>& fn) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new pm_report{fn()};
  });
}

}  // namespace

extern "C" {

const char* pm_version(void) { return "1.0.0"; }

const char* pm_status_name(pm_status status) {
  switch (status) {
    case PM_OK: return "OK";
    case PM_ERR_NON_FINITE: return "NonFinite";
    case PM_ERR_NOT_SQUARE: return "NotSquare";
    case PM_ERR_NOT_HERMITIAN: return "NotHermitian";
    case PM_ERR_NOT_PSD: return "NotPSD";
    case PM_ERR_NOT_UNIT_TRACE: return "NotUnitTrace";
    case PM_ERR_NOT_DENSITY: return "NotDensity";
    case PM_ERR_NO_CONVERGENCE: return "NoConvergence";
    case PM_ERR_DOMAIN: return "DomainError";
    case PM_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case PM_ERR_SPEC_TOO_SMALL: return "SpecTooSmall";
    case PM_ERR_EMPTY_KEEP: return "EmptyKeep";
    case PM_ERR_ZERO_TRACE: return "ZeroTrace";
    case PM_ERR_SHIFT_TOO_SMALL: return "ShiftTooSmall";
    case PM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PM_ERR_PARSE: return "ParseError";
    case PM_ERR_IO: return "IoError";
    case PM_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* pm_last_error(void) { return last_error.c_str(); }

// ---- matrices --------------------------------------------------------------

pm_status pm_matrix_create(size_t rows, size_t cols, const double* re_im, pm_matrix** out) {
  return guarded([&] {
    require(out != nullptr && re_im != nullptr, "null argument");
    std::vector<Complex> data(rows * cols);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = {re_im[2 * i], re_im[2 * i + 1]};
    *out = wrap(ComplexMatrix(rows, cols, std::move(data)));
  });
}

pm_status pm_matrix_identity(size_t dim, pm_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(dim > 0, "dimension must be positive");
    *out = wrap(ComplexMatrix::identity(dim));
  });
}

pm_status pm_matrix_clone(const pm_matrix* m, pm_matrix** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = wrap(m->value);
  });
}

void pm_matrix_free(pm_matrix* m) { delete m; }

size_t pm_matrix_rows(const pm_matrix* m) { return m ? m->value.rows() : 0; }
size_t pm_matrix_cols(const pm_matrix* m) { return m ? m->value.cols() : 0; }

pm_status pm_matrix_get(const pm_matrix* m, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    require(m != nullptr && re != nullptr && im != nullptr, "null argument");
    require(row < m->value.rows() && col < m->value.cols(), "index out of range");
    *re = m->value(row, col).real();
    *im = m->value(row, col).imag();
  });
}

pm_status pm_matrix_copy_data(const pm_matrix* m, double* re_im, size_t capacity) {
  return guarded([&] {
    require(m != nullptr && re_im != nullptr, "null argument");
    const auto data = m->value.data();
    require(capacity >= 2 * data.size(), "buffer too small");
    for (std::size_t i = 0; i < data.size(); ++i) {
      re_im[2 * i] = data[i].real();
      re_im[2 * i + 1] = data[i].imag();
    }
  });
}

pm_status pm_matrix_trace(const pm_matrix* m, double* re, double* im) {
  return guarded([&] {
    require(m != nullptr && re != nullptr && im != nullptr, "null argument");
    const Complex t = portrait::trace(m->value);
    *re = t.real();
    *im = t.imag();
  });
}

pm_status pm_matrix_read_file(const char* path, pm_matrix** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::read_matrix_file(path));
  });
}

pm_status pm_matrix_write_file(const pm_matrix* m, const char* path) {
  return guarded([&] {
    require(m != nullptr && path != nullptr, "null argument");
    portrait::write_matrix_file(m->value, path);
  });
}

pm_status pm_matrix_parse_json(const char* text, pm_matrix** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::matrix_from_json(text));
  });
}

pm_status pm_matrix_to_json(const pm_matrix* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    const std::string text = portrait::matrix_to_json(m->value);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void pm_string_free(char* s) { std::free(s); }

// ---- hermitian core --------------------------------------------------------

pm_status pm_validate(const pm_matrix* m, pm_level level) {
  return guarded([&] {
    require(m != nullptr, "null matrix");
    portrait::ValidationLevel lv = portrait::ValidationLevel::Hermitian;
    if (level == PM_LEVEL_PSD) lv = portrait::ValidationLevel::PSD;
    else if (level == PM_LEVEL_DENSITY) lv = portrait::ValidationLevel::Density;
    else require(level == PM_LEVEL_HERMITIAN, "unknown validation level");
    portrait::validate_hermitian(m->value, lv);
  });
}

pm_status pm_eigenvalues(const pm_matrix* m, double* out, size_t capacity) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto h = hermitian(m);
    require(capacity >= h.dim(), "buffer too small");
    const std::vector<double> ev = portrait::eigenvalues(h);
    std::copy(ev.begin(), ev.end(), out);
  });
}

pm_status pm_min_eigenvalue(const pm_matrix* m, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = portrait::min_eigenvalue(hermitian(m));
  });
}

pm_status pm_kron(const pm_matrix* b, const pm_matrix* c, pm_matrix** out) {
  return guarded([&] {
    require(b != nullptr && c != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::kron(b->value, c->value));
  });
}

// ---- portrait maps ---------------------------------------------------------

pm_status pm_block_trace_map(const pm_matrix* a, size_t n, size_t m, pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::block_trace_map(a->value, {n, m}));
  });
}

pm_status pm_diagonal_block_sum(const pm_matrix* a, size_t n, size_t m, pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::diagonal_block_sum(a->value, {n, m}));
  });
}

pm_status pm_embed(const pm_matrix* a, size_t target_dim, size_t offset, pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::embed(a->value, {target_dim, offset}));
  });
}

pm_status pm_shift(const pm_matrix* a, double x, pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::shift(a->value, x));
  });
}

pm_status pm_chain_portrait(const pm_matrix* a, const size_t* radices, size_t num_radices,
                            const size_t* keep, size_t num_keep, pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    require(radices != nullptr || num_radices == 0, "null radices");
    require(keep != nullptr || num_keep == 0, "null keep");
    portrait::ChainFactorization c{{radices, radices + num_radices}, {keep, keep + num_keep}};
    *out = wrap(portrait::chain_portrait(a->value, c));
  });
}

// ---- entropies and checks --------------------------------------------------

pm_status pm_entropy(const pm_matrix* a, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = portrait::von_neumann_entropy(hermitian(a));
  });
}

static pm_status mutinfo_impl(const pm_matrix* a, size_t n, size_t m, pm_mutinfo* out,
                              bool embedded) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto h = hermitian(a);
    const portrait::MutualInformationResult r =
        embedded ? portrait::mutual_information_via_embedding(h, {n, m})
                 : portrait::mutual_matrix_information(h, {n, m});
    *out = {r.value, r.entropy_joint, r.entropy_part1, r.entropy_part2};
  });
}

pm_status pm_mutual_information(const pm_matrix* a, size_t n, size_t m, pm_mutinfo* out) {
  return mutinfo_impl(a, n, m, out, false);
}

pm_status pm_mutual_information_embedded(const pm_matrix* a, size_t n, size_t m,
                                         pm_mutinfo* out) {
  return mutinfo_impl(a, n, m, out, true);
}

pm_status pm_check_subadditivity(const pm_matrix* a, size_t n, size_t m, double tol,
                                 pm_report** out) {
  return emit_report(out, [&] { return portrait::check_subadditivity(hermitian(a), {n, m}, tol); });
}

pm_status pm_check_padded_subadditivity(const pm_matrix* a, size_t target_dim, size_t offset,
                                        size_t n, size_t m, double tol, pm_report** out) {
  return emit_report(out, [&] {
    return portrait::check_padded_subadditivity(hermitian(a), {target_dim, offset}, {n, m}, tol);
  });
}

pm_status pm_check_scaled(const pm_matrix* a, size_t n, size_t m, double tol,
                          pm_report** out) {
  return emit_report(out, [&] { return portrait::check_scaled(hermitian(a), {n, m}, tol); });
}

pm_status pm_check_shifted(const pm_matrix* a, size_t target_dim, size_t offset, size_t n,
                           size_t m, double x, double tol, pm_report** out) {
  return emit_report(out, [&] {
    return portrait::check_shifted(hermitian(a), {target_dim, offset}, {n, m}, x, tol);
  });
}

pm_status pm_check_ssa(const pm_matrix* a, size_t n1, size_t n2, size_t n3, double tol,
                       pm_report** out) {
  return emit_report(out, [&] {
    return portrait::check_ssa_analog(hermitian(a), {n1, n2, n3}, tol);
  });
}

void pm_report_free(pm_report* r) { delete r; }
const char* pm_report_name(const pm_report* r) { return r ? r->value.inequality.c_str() : ""; }
double pm_report_lhs(const pm_report* r) { return r ? r->value.lhs : 0.0; }
double pm_report_rhs(const pm_report* r) { return r ? r->value.rhs : 0.0; }
double pm_report_slack(const pm_report* r) { return r ? r->value.slack : 0.0; }
double pm_report_tolerance(const pm_report* r) { return r ? r->value.tolerance : 0.0; }
int pm_report_satisfied(const pm_report* r) { return r && r->value.satisfied ? 1 : 0; }
size_t pm_report_term_count(const pm_report* r) { return r ? r->value.terms.size() : 0; }

pm_status pm_report_term(const pm_report* r, size_t index, const char** label, double* value) {
  return guarded([&] {
    require(r != nullptr && label != nullptr && value != nullptr, "null argument");
    require(index < r->value.terms.size(), "term index out of range");
    *label = r->value.terms[index].first.c_str();
    *value = r->value.terms[index].second;
  });
}

// ---- random generation -----------------------------------------------------

pm_status pm_generator_create(uint64_t seed, uint64_t stream, pm_generator** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new pm_generator{portrait::SeededGenerator(seed, stream)};
  });
}

void pm_generator_free(pm_generator* g) { delete g; }

pm_status pm_generator_uniform(pm_generator* g, double* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = g->value.uniform();
  });
}

pm_status pm_gen_haar_unitary(pm_generator* g, size_t dim, pm_matrix** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::haar_unitary(g->value, dim));
  });
}

pm_status pm_gen_pure_density(pm_generator* g, size_t dim, pm_matrix** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::random_pure_density(g->value, dim).matrix());
  });
}

pm_status pm_gen_mixed_density(pm_generator* g, size_t dim, pm_matrix** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::random_mixed_density(g->value, dim).matrix());
  });
}

pm_status pm_gen_hermitian(pm_generator* g, size_t dim, double scale, pm_matrix** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::random_hermitian(g->value, dim, scale).matrix());
  });
}

pm_status pm_gen_separable(pm_generator* g, size_t n, size_t m, size_t terms, pm_matrix** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = wrap(portrait::random_separable(g->value, {n, m}, terms).matrix());
  });
}

// ---- oracle ----------------------------------------------------------------

pm_status pm_oracle_portrait(const pm_matrix* a, size_t n, size_t m, pm_matrix** a1,
                             pm_matrix** a2) {
  return guarded([&] {
    require(a != nullptr && a1 != nullptr && a2 != nullptr, "null argument");
    const auto p = portrait::oracle::portrait(a->value.data(), n, m);
    ComplexMatrix m1 = from_oracle(p.a1);
    ComplexMatrix m2 = from_oracle(p.a2);
    *a1 = wrap(std::move(m1));
    *a2 = wrap(std::move(m2));
  });
}

pm_status pm_oracle_chain_portrait(const pm_matrix* a, const size_t* radices,
                                   size_t num_radices, const size_t* keep, size_t num_keep,
                                   pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    require(radices != nullptr || num_radices == 0, "null radices");
    require(keep != nullptr || num_keep == 0, "null keep");
    *out = wrap(from_oracle(portrait::oracle::chain_portrait(
        a->value.data(), {radices, num_radices}, {keep, num_keep})));
  });
}

pm_status pm_oracle_embed_shift(const pm_matrix* a, size_t target_dim, size_t offset,
                                double x, pm_matrix** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    require(a->value.is_square(), "oracle embed expects a square matrix");
    *out = wrap(from_oracle(portrait::oracle::embed_shift(a->value.data(), a->value.rows(),
                                                          target_dim, offset, x)));
  });
}

pm_status pm_oracle_entropy(const pm_matrix* a, double* out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    require(a->value.is_square(), "oracle entropy expects a square matrix");
    *out = portrait::oracle::entropy(a->value.data(), a->value.rows());
  });
}

}  // extern "C"
