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

#include "portrait/randgen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "portrait/error.hpp"

namespace portrait {
namespace {

using u128 = detail::uint128;

constexpr u128 kMultiplier =
    (static_cast<u128>(2549297995355413924ULL) << 64) + 4865540595714422341ULL;

void require_dim(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
}

HermitianMatrix as_density(const ComplexMatrix& m) {
  return validate_hermitian(m, ValidationLevel::Density);
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  inc_ = (static_cast<u128>(stream) << 1) | 1u;
  state_ = 0;
  step();
  state_ += seed;
  step();
}

void SeededGenerator::step() noexcept { state_ = state_ * kMultiplier + inc_; }

std::uint64_t SeededGenerator::next_u64() noexcept {
  step();
  const auto rot = static_cast<unsigned>(state_ >> 122);
  const auto xored = static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
  return (xored >> rot) | (xored << ((64u - rot) & 63u));
}

double SeededGenerator::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex SeededGenerator::complex_normal() noexcept {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

double SeededGenerator::exponential() noexcept { return -std::log(1.0 - uniform()); }

ComplexMatrix ginibre(SeededGenerator& gen, std::size_t dim) {
  require_dim(dim);
  std::vector<Complex> data(dim * dim);
  for (Complex& z : data) z = gen.complex_normal();
  return ComplexMatrix(dim, dim, std::move(data));
}

ComplexMatrix haar_unitary(SeededGenerator& gen, std::size_t dim) {
  const ComplexMatrix g = ginibre(gen, dim);
  // Column-wise modified Gram-Schmidt, two passes.
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) cols[j][i] = g(i, j);
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
        for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= proj * cols[k][i];
      }
    }
    double norm = 0.0;
    for (const Complex& z : cols[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (Complex& z : cols[j]) z /= norm;
  }
  return ComplexMatrix::from_fn(dim, dim,
                                [&](std::size_t i, std::size_t j) { return cols[j][i]; });
}

HermitianMatrix random_pure_density(SeededGenerator& gen, std::size_t dim) {
  require_dim(dim);
  std::vector<Complex> psi(dim);
  double norm = 0.0;
  for (Complex& z : psi) {
    z = gen.complex_normal();
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (Complex& z : psi) z /= norm;
  return as_density(ComplexMatrix::from_fn(
      dim, dim, [&](std::size_t i, std::size_t j) { return psi[i] * std::conj(psi[j]); }));
}

HermitianMatrix random_mixed_density(SeededGenerator& gen, std::size_t dim) {
  const ComplexMatrix g = ginibre(gen, dim);
  const ComplexMatrix w = g * adjoint(g);
  return as_density(Complex(1.0 / trace(w).real()) * w);
}

HermitianMatrix random_hermitian(SeededGenerator& gen, std::size_t dim, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  const ComplexMatrix g = ginibre(gen, dim);
  return validate_hermitian(ComplexMatrix::from_fn(dim, dim, [&](std::size_t i, std::size_t j) {
    return 0.5 * scale * (g(i, j) + std::conj(g(j, i)));
  }));
}

HermitianMatrix random_separable(SeededGenerator& gen, BlockFactorization f,
                                 std::size_t terms) {
  if (terms == 0) throw Error(ErrorCode::InvalidArgument, "terms must be >= 1");
  require_dim(f.blocks);
  require_dim(f.block_size);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = gen.exponential();
    total += w;
  }
  ComplexMatrix sum = ComplexMatrix::zeros(f.dim(), f.dim());
  for (double w : weights) {
    const HermitianMatrix b = random_mixed_density(gen, f.blocks);
    const HermitianMatrix c = random_mixed_density(gen, f.block_size);
    sum = sum + Complex(w / total) * kron(b.matrix(), c.matrix());
  }
  return as_density(sum);
}

}  // namespace portrait
