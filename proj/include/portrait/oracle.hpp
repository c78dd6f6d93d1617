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

// Brute-force reference routines for cross-checking the main library. This
// module deliberately shares no code with matrix/hermitian/maps: inputs are
// raw row-major buffers and every loop is written out longhand.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace portrait::oracle {

struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> data;  // row-major

  std::complex<double> at(std::size_t i, std::size_t j) const {
    return data[i * dim + j];
  }
};

struct Portraits {
  SquareMatrix a1;  // n x n
  SquareMatrix a2;  // m x m
};

/// Explicit index sums over composite indices r = j*m + alpha.
/// Throws portrait::Error(DimensionMismatch) unless data.size() == (n*m)^2.
Portraits portrait(std::span<const std::complex<double>> data, std::size_t n,
                   std::size_t m);

/// Reduction onto the factors in `keep` (0-based, any order; result keeps
/// the original factor order).
SquareMatrix chain_portrait(std::span<const std::complex<double>> data,
                            std::span<const std::size_t> radices,
                            std::span<const std::size_t> keep);

/// Zero-pad into target_dim at `offset`, then add x on the diagonal.
SquareMatrix embed_shift(std::span<const std::complex<double>> data,
                         std::size_t dim, std::size_t target_dim,
                         std::size_t offset, double x);

/// Spectrum of a Hermitian matrix via its real symmetric 2N x 2N embedding,
/// Householder tridiagonalization and Sturm-sequence bisection. Ascending.
std::vector<double> eigenvalues(std::span<const std::complex<double>> data,
                                std::size_t dim);

/// -sum lambda ln lambda with Neumaier summation. Eigenvalues down to
/// -psd_tol * max(1, max|lambda|) are treated as zero; lower ones throw
/// portrait::Error(NotPSD).
double entropy(std::span<const std::complex<double>> data, std::size_t dim,
               double psd_tol = 1e-10);

}  // namespace portrait::oracle
