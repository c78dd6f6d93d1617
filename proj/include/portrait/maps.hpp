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

#pragma once

#include <cstddef>
#include <vector>

#include "portrait/matrix.hpp"

namespace portrait {

/// N = blocks * block_size. The matrix is viewed as a blocks x blocks grid of
/// block_size x block_size blocks; composite index r = j * block_size + alpha.
struct BlockFactorization {
  std::size_t blocks = 1;      // n, left factor
  std::size_t block_size = 1;  // m, right factor

  std::size_t dim() const noexcept { return blocks * block_size; }
};

/// The two images of the block maps: traces of blocks (n x n) and the sum of
/// diagonal blocks (m x m).
struct PortraitPair {
  ComplexMatrix a1;
  ComplexMatrix a2;
};

/// Place an N x N matrix at rows/cols [offset, offset + N) of a
/// target_dim x target_dim zero matrix.
struct EmbeddingSpec {
  std::size_t target_dim = 0;
  std::size_t offset = 0;
};

/// Mixed-radix factorization N = prod(radices). `keep` lists 0-based factor
/// positions to retain; the rest are summed out.
struct ChainFactorization {
  std::vector<std::size_t> radices;
  std::vector<std::size_t> keep;
};

/// A -> A1, (A1)_{jk} = Tr a_{jk}. Throws DimensionMismatch unless A is
/// square with dim = f.dim().
ComplexMatrix block_trace_map(const ComplexMatrix& a, BlockFactorization f);

/// A -> A2 = sum_k a_{kk}.
ComplexMatrix diagonal_block_sum(const ComplexMatrix& a, BlockFactorization f);

PortraitPair portrait_pair(const ComplexMatrix& a, BlockFactorization f);

/// Zero-padding embedding. Throws SpecTooSmall if offset + N > target_dim.
ComplexMatrix embed(const ComplexMatrix& a, EmbeddingSpec spec);

/// A + x * I.
ComplexMatrix shift(const ComplexMatrix& a, double x);

/// Generalized partial trace over the factors not listed in `keep`. Kept
/// factors stay in their original order. Errors: DimensionMismatch,
/// EmptyKeep, InvalidArgument (keep out of range or repeated).
ComplexMatrix chain_portrait(const ComplexMatrix& a, const ChainFactorization& c);

/// All (n, m) with n * m == dim, n and m >= 2, ordered by n.
std::vector<BlockFactorization> nontrivial_factorizations(std::size_t dim);

}  // namespace portrait
