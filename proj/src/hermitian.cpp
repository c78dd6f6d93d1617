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

#include "portrait/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "portrait/error.hpp"

namespace portrait {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTarget = 1e-14;

struct JacobiResult {
  std::vector<double> values;
  std::vector<Complex> vectors;  // row-major N x N, columns are eigenvectors
};

// Cyclic Jacobi for complex Hermitian input. Each (p, q) rotation is the
// phase diag(1, conj(e)) followed by a real Givens rotation, e = a_pq/|a_pq|.
JacobiResult jacobi(const ComplexMatrix& h, bool want_vectors) {
  const std::size_t n = h.rows();
  std::vector<Complex> a(h.data().begin(), h.data().end());
  std::vector<Complex> v;
  if (want_vectors) {
    v.assign(n * n, Complex(0.0));
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  auto at = [n](std::vector<Complex>& m, std::size_t i, std::size_t j) -> Complex& {
    return m[i * n + j];
  };

  const double norm = frobenius_norm(h);
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(at(a, i, j));
    if (std::sqrt(off) <= kOffDiagonalTarget * norm) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = at(a, p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double app = at(a, p, p).real();
        const double aqq = at(a, q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 0.0;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // U restricted to (p, q).
        const Complex u00 = c;
        const Complex u01 = s;
        const Complex u10 = -s * std::conj(phase);
        const Complex u11 = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = at(a, k, p);
          const Complex akq = at(a, k, q);
          at(a, k, p) = akp * u00 + akq * u10;
          at(a, k, q) = akp * u01 + akq * u11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = at(a, p, k);
          const Complex aqk = at(a, q, k);
          at(a, p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          at(a, q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        at(a, p, p) = app - t * mag;
        at(a, q, q) = aqq + t * mag;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = at(v, k, p);
            const Complex vkq = at(v, k, q);
            at(v, k, p) = vkp * u00 + vkq * u10;
            at(v, k, q) = vkp * u01 + vkq * u11;
          }
        }
      }
    }
  }
  if (!converged)
    throw Error(ErrorCode::NoConvergence,
                "Jacobi eigensolver exceeded " + std::to_string(kMaxSweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return at(a, x, x).real() < at(a, y, y).real();
  });

  JacobiResult out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = at(a, order[k], order[k]).real();
  if (want_vectors) {
    out.vectors.assign(n * n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t src = order[k];
      // Phase convention: first non-negligible component real positive.
      Complex fix = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex z = at(v, i, src);
        if (std::abs(z) > 1e-12) {
          fix = std::conj(z) / std::abs(z);
          break;
        }
      }
      for (std::size_t i = 0; i < n; ++i) out.vectors[i * n + k] = at(v, i, src) * fix;
    }
  }
  return out;
}

double spectral_scale(std::span<const double> values) {
  double s = 1.0;
  for (double x : values) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

double HermitianMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += matrix_(i, i).real();
  return t;
}

HermitianMatrix validate_hermitian(const ComplexMatrix& m, ValidationLevel level,
                                   const Tolerances& tol) {
  if (!m.is_square())
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " is not square");
  const std::size_t n = m.rows();
  double asym = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k)
      asym = std::max(asym, std::abs(m(j, k) - std::conj(m(k, j))));
  const double bound = tol.hermitian * (1.0 + max_abs(m));
  if (asym > bound)
    throw Error(ErrorCode::NotHermitian,
                "asymmetry " + std::to_string(asym) + " exceeds " + std::to_string(bound));

  ComplexMatrix herm = ComplexMatrix::from_fn(n, n, [&](std::size_t j, std::size_t k) {
    if (j == k) return Complex(m(j, j).real());
    return 0.5 * (m(j, k) + std::conj(m(k, j)));
  });

  if (level != ValidationLevel::Hermitian) {
    const JacobiResult spec = jacobi(herm, false);
    const double floor = -tol.psd * spectral_scale(spec.values);
    if (spec.values.front() < floor) {
      char msg[96];
      std::snprintf(msg, sizeof msg, "minimum eigenvalue %.6g below %.3g",
                    spec.values.front(), floor);
      throw Error(ErrorCode::NotPSD, msg);
    }
  }
  if (level == ValidationLevel::Density) {
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) t += herm(i, i).real();
    if (std::abs(t - 1.0) > tol.unit_trace)
      throw Error(ErrorCode::NotUnitTrace, "trace " + std::to_string(t) + " is not 1");
  }
  return HermitianMatrix(std::move(herm), level);
}

Eigendecomposition eigh(const HermitianMatrix& a) {
  JacobiResult r = jacobi(a.matrix(), true);
  return {std::move(r.values), ComplexMatrix(a.dim(), a.dim(), std::move(r.vectors))};
}

std::vector<double> eigenvalues(const HermitianMatrix& a) {
  return jacobi(a.matrix(), false).values;
}

double min_eigenvalue(const HermitianMatrix& a) { return eigenvalues(a).front(); }

ComplexMatrix spectral_apply(const HermitianMatrix& a,
                             const std::function<double(double)>& f) {
  const Eigendecomposition e = eigh(a);
  const std::size_t n = a.dim();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) {
    fv[k] = f(e.eigenvalues[k]);
    if (!std::isfinite(fv[k]))
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(e.eigenvalues[k]));
  }
  const ComplexMatrix& v = e.eigenvectors;
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += v(i, k) * fv[k] * std::conj(v(j, k));
      if (i == j) s = s.real();
      out[i * n + j] = s;
      out[j * n + i] = std::conj(s);
    }
  }
  return ComplexMatrix(n, n, std::move(out));
}

}  // namespace portrait
