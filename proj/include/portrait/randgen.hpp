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
#include <cstdint>

#include "portrait/hermitian.hpp"
#include "portrait/maps.hpp"

namespace portrait {

namespace detail {
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

/// PCG-XSL-RR 128/64 ("pcg64") with an explicit stream selector. Equal
/// (seed, stream) pairs give identical sequences on every platform.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed = 0, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Standard complex normal, E|z|^2 = 1, via Box-Muller (no rejection).
  Complex complex_normal() noexcept;
  /// Exp(1) variate, -ln(1 - u).
  double exponential() noexcept;

 private:
  void step() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  detail::uint128 state_ = 0;
  detail::uint128 inc_ = 0;
};

/// dim x dim matrix of i.i.d. standard complex normals.
ComplexMatrix ginibre(SeededGenerator& gen, std::size_t dim);

/// Haar unitary: Gram-Schmidt on a Ginibre sample, which fixes R's diagonal
/// real positive.
ComplexMatrix haar_unitary(SeededGenerator& gen, std::size_t dim);

HermitianMatrix random_pure_density(SeededGenerator& gen, std::size_t dim);

/// Hilbert-Schmidt measure: G G^dagger / Tr(G G^dagger).
HermitianMatrix random_mixed_density(SeededGenerator& gen, std::size_t dim);

/// scale * (G + G^dagger) / 2; generally indefinite.
HermitianMatrix random_hermitian(SeededGenerator& gen, std::size_t dim,
                                 double scale = 1.0);

/// sum_k p_k B_k (x) C_k with Dirichlet(1,...,1) weights and Hilbert-Schmidt
/// factors.
HermitianMatrix random_separable(SeededGenerator& gen, BlockFactorization f,
                                 std::size_t terms);

}  // namespace portrait
