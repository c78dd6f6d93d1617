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

#include "portrait/maps.hpp"

#include <algorithm>
#include <string>

#include "portrait/error.hpp"

namespace portrait {
namespace {

void require_factorization(const ComplexMatrix& a, BlockFactorization f) {
  if (f.blocks == 0 || f.block_size == 0)
    throw Error(ErrorCode::InvalidArgument, "factors must be positive");
  if (!a.is_square() || a.rows() != f.dim())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " matrix does not factor as " + std::to_string(f.blocks) + "*" +
                    std::to_string(f.block_size));
}

}  // namespace

ComplexMatrix block_trace_map(const ComplexMatrix& a, BlockFactorization f) {
  require_factorization(a, f);
  const std::size_t m = f.block_size;
  return ComplexMatrix::from_fn(f.blocks, f.blocks, [&](std::size_t j, std::size_t k) {
    Complex t = 0.0;
    for (std::size_t alpha = 0; alpha < m; ++alpha) t += a(j * m + alpha, k * m + alpha);
    return t;
  });
}

ComplexMatrix diagonal_block_sum(const ComplexMatrix& a, BlockFactorization f) {
  require_factorization(a, f);
  const std::size_t m = f.block_size;
  return ComplexMatrix::from_fn(m, m, [&](std::size_t alpha, std::size_t beta) {
    Complex t = 0.0;
    for (std::size_t k = 0; k < f.blocks; ++k) t += a(k * m + alpha, k * m + beta);
    return t;
  });
}

PortraitPair portrait_pair(const ComplexMatrix& a, BlockFactorization f) {
  return {block_trace_map(a, f), diagonal_block_sum(a, f)};
}

ComplexMatrix embed(const ComplexMatrix& a, EmbeddingSpec spec) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "embed expects a square matrix");
  const std::size_t n = a.rows();
  if (spec.offset + n > spec.target_dim)
    throw Error(ErrorCode::SpecTooSmall,
                "offset " + std::to_string(spec.offset) + " + dim " + std::to_string(n) +
                    " exceeds target " + std::to_string(spec.target_dim));
  const std::size_t lo = spec.offset;
  const std::size_t hi = spec.offset + n;
  return ComplexMatrix::from_fn(spec.target_dim, spec.target_dim,
                                [&](std::size_t i, std::size_t j) {
                                  if (i < lo || i >= hi || j < lo || j >= hi)
                                    return Complex(0.0);
                                  return a(i - lo, j - lo);
                                });
}

ComplexMatrix shift(const ComplexMatrix& a, double x) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "shift expects a square matrix");
  return ComplexMatrix::from_fn(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return i == j ? a(i, j) + x : a(i, j);
  });
}

ComplexMatrix chain_portrait(const ComplexMatrix& a, const ChainFactorization& c) {
  if (c.keep.empty()) throw Error(ErrorCode::EmptyKeep, "keep set is empty");
  std::size_t total = 1;
  for (std::size_t r : c.radices) {
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "radices must be positive");
    total *= r;
  }
  if (c.radices.empty() || !a.is_square() || a.rows() != total)
    throw Error(ErrorCode::DimensionMismatch,
                "radices product " + std::to_string(total) + " does not match dim " +
                    std::to_string(a.rows()));
  const std::size_t factors = c.radices.size();
  std::vector<bool> kept(factors, false);
  for (std::size_t k : c.keep) {
    if (k >= factors || kept[k])
      throw Error(ErrorCode::InvalidArgument, "keep index out of range or repeated");
    kept[k] = true;
  }

  // Strides of each factor in the composite index (last factor fastest).
  std::vector<std::size_t> stride(factors);
  std::size_t acc = 1;
  for (std::size_t k = factors; k-- > 0;) {
    stride[k] = acc;
    acc *= c.radices[k];
  }

  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  std::vector<std::size_t> kept_factors;
  std::vector<std::size_t> traced_factors;
  for (std::size_t k = 0; k < factors; ++k) {
    if (kept[k]) {
      kept_factors.push_back(k);
      kept_dim *= c.radices[k];
    } else {
      traced_factors.push_back(k);
      traced_dim *= c.radices[k];
    }
  }

  // Offset in the full index contributed by a mixed-radix index over `which`.
  auto offsets = [&](const std::vector<std::size_t>& which, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rem = idx;
      std::size_t off = 0;
      for (std::size_t w = which.size(); w-- > 0;) {
        const std::size_t k = which[w];
        off += (rem % c.radices[k]) * stride[k];
        rem /= c.radices[k];
      }
      out[idx] = off;
    }
    return out;
  };
  const std::vector<std::size_t> kept_off = offsets(kept_factors, kept_dim);
  const std::vector<std::size_t> traced_off = offsets(traced_factors, traced_dim);

  return ComplexMatrix::from_fn(kept_dim, kept_dim, [&](std::size_t i, std::size_t j) {
    Complex s = 0.0;
    for (std::size_t t : traced_off) s += a(kept_off[i] + t, kept_off[j] + t);
    return s;
  });
}

std::vector<BlockFactorization> nontrivial_factorizations(std::size_t dim) {
  std::vector<BlockFactorization> out;
  for (std::size_t n = 2; n * 2 <= dim; ++n)
    if (dim % n == 0) out.push_back({n, dim / n});
  return out;
}

}  // namespace portrait
