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

#include "portrait/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "portrait/error.hpp"

namespace portrait::oracle {
namespace {

// Householder reduction of a real symmetric matrix to tridiagonal form.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag,
                    std::vector<double>& off) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += at(i, k) * at(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = at(k + 1, k) > 0.0 ? -norm : norm;

    std::vector<double> v(n, 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = at(i, k);
    v[k + 1] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += v[i] * v[i];
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    std::vector<double> p(n, 0.0);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) p[i] += at(i, j) * v[j];
    double kk = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) kk += v[i] * p[i];
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= kk * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= 2.0 * (v[i] * p[j] + p[i] * v[j]);

    at(k + 1, k) = alpha;
    at(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) {
      at(i, k) = 0.0;
      at(k, i) = 0.0;
    }
  }
  diag.resize(n);
  off.assign(n > 0 ? n - 1 : 0, 0.0);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = at(i + 1, i);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                        double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double sub = i == 0 ? 0.0 : e[i - 1] * e[i - 1] / q;
    q = d[i] - x - sub;
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1e-300);
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

Portraits portrait(std::span<const std::complex<double>> data, std::size_t n,
                   std::size_t m) {
  const std::size_t big = n * m;
  if (n == 0 || m == 0 || data.size() != big * big)
    throw Error(ErrorCode::DimensionMismatch, "oracle portrait: dim != n*m");
  Portraits out{{n, std::vector<std::complex<double>>(n * n)},
                {m, std::vector<std::complex<double>>(m * m)}};
  for (std::size_t r = 0; r < big; ++r) {
    for (std::size_t s = 0; s < big; ++s) {
      const std::size_t j = r / m, alpha = r % m;
      const std::size_t k = s / m, beta = s % m;
      const std::complex<double> v = data[r * big + s];
      if (alpha == beta) out.a1.data[j * n + k] += v;
      if (j == k) out.a2.data[alpha * m + beta] += v;
    }
  }
  return out;
}

SquareMatrix chain_portrait(std::span<const std::complex<double>> data,
                            std::span<const std::size_t> radices,
                            std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptyKeep, "oracle chain: keep set is empty");
  std::size_t big = 1;
  for (std::size_t r : radices) big *= r;
  if (radices.empty() || data.size() != big * big)
    throw Error(ErrorCode::DimensionMismatch, "oracle chain: radices do not match");
  const std::size_t factors = radices.size();
  std::vector<bool> kept(factors, false);
  for (std::size_t k : keep) {
    if (k >= factors) throw Error(ErrorCode::InvalidArgument, "oracle chain: bad keep");
    kept[k] = true;
  }
  std::size_t small = 1;
  for (std::size_t k = 0; k < factors; ++k)
    if (kept[k]) small *= radices[k];

  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(factors);
    for (std::size_t k = factors; k-- > 0;) {
      d[k] = idx % radices[k];
      idx /= radices[k];
    }
    return d;
  };

  SquareMatrix out{small, std::vector<std::complex<double>>(small * small)};
  for (std::size_t r = 0; r < big; ++r) {
    const std::vector<std::size_t> dr = digits(r);
    for (std::size_t s = 0; s < big; ++s) {
      const std::vector<std::size_t> ds = digits(s);
      bool diagonal_in_traced = true;
      std::size_t i = 0, j = 0;
      for (std::size_t k = 0; k < factors; ++k) {
        if (kept[k]) {
          i = i * radices[k] + dr[k];
          j = j * radices[k] + ds[k];
        } else if (dr[k] != ds[k]) {
          diagonal_in_traced = false;
        }
      }
      if (diagonal_in_traced) out.data[i * small + j] += data[r * big + s];
    }
  }
  return out;
}

SquareMatrix embed_shift(std::span<const std::complex<double>> data, std::size_t dim,
                         std::size_t target_dim, std::size_t offset, double x) {
  if (data.size() != dim * dim)
    throw Error(ErrorCode::DimensionMismatch, "oracle embed: bad input size");
  if (offset + dim > target_dim)
    throw Error(ErrorCode::SpecTooSmall, "oracle embed: target too small");
  SquareMatrix out{target_dim, std::vector<std::complex<double>>(target_dim * target_dim)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out.data[(offset + i) * target_dim + offset + j] = data[i * dim + j];
  for (std::size_t i = 0; i < target_dim; ++i) out.data[i * target_dim + i] += x;
  return out;
}

std::vector<double> eigenvalues(std::span<const std::complex<double>> data,
                                std::size_t dim) {
  if (dim == 0 || data.size() != dim * dim)
    throw Error(ErrorCode::DimensionMismatch, "oracle eigenvalues: bad input size");
  // H = X + iY  ->  [[X, -Y], [Y, X]], whose spectrum is that of H doubled.
  const std::size_t n2 = 2 * dim;
  std::vector<double> s(n2 * n2);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // Symmetrize explicitly; inputs are Hermitian up to rounding.
      const double x = 0.5 * (data[i * dim + j].real() + data[j * dim + i].real());
      const double y = 0.5 * (data[i * dim + j].imag() - data[j * dim + i].imag());
      s[i * n2 + j] = x;
      s[(i + dim) * n2 + (j + dim)] = x;
      s[i * n2 + (j + dim)] = -y;
      s[(i + dim) * n2 + j] = y;
    }
  }
  std::vector<double> d, e;
  tridiagonalize(s, n2, d, e);

  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n2; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(e[i - 1]);
    if (i + 1 < n2) radius += std::abs(e[i]);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;

  std::vector<double> doubled(n2);
  for (std::size_t k = 0; k < n2; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(d, e, mid) > k)
        b = mid;
      else
        a = mid;
    }
    doubled[k] = 0.5 * (a + b);
  }
  std::vector<double> out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
  return out;
}

double entropy(std::span<const std::complex<double>> data, std::size_t dim,
               double psd_tol) {
  const std::vector<double> ev = eigenvalues(data, dim);
  double scale = 1.0;
  for (double x : ev) scale = std::max(scale, std::abs(x));
  double sum = 0.0, comp = 0.0;
  for (double x : ev) {
    if (x < -psd_tol * scale)
      throw Error(ErrorCode::NotPSD, "oracle entropy: eigenvalue " + std::to_string(x));
    if (x <= 0.0) continue;
    const double term = -x * std::log(x);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace portrait::oracle
