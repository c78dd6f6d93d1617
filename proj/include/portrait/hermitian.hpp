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

#include <functional>
#include <vector>

#include "portrait/matrix.hpp"

namespace portrait {

/// Numerical thresholds shared by validation and the spectral routines.
struct Tolerances {
  double hermitian = 1e-12;   // relative asymmetry, scaled by 1 + max|A|
  double psd = 1e-10;         // eigenvalue floor, scaled by max(1, ||A||_2)
  double unit_trace = 1e-10;  // |Tr A - 1|
};

enum class ValidationLevel { Hermitian, PSD, Density };

/// A square matrix known to be Hermitian (and optionally PSD / unit trace).
/// Only obtainable through validate_hermitian().
class HermitianMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  ValidationLevel level() const noexcept { return level_; }
  double trace() const noexcept;

 private:
  friend HermitianMatrix validate_hermitian(const ComplexMatrix&, ValidationLevel,
                                            const Tolerances&);
  HermitianMatrix(ComplexMatrix m, ValidationLevel level)
      : matrix_(std::move(m)), level_(level) {}

  ComplexMatrix matrix_;
  ValidationLevel level_;
};

struct Eigendecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

/// Validates `m` at the requested level. The stored matrix is the
/// Hermitian part (M + M^dagger)/2 so downstream spectra are exactly real.
/// Errors: NotSquare, NotHermitian, NotPSD, NotUnitTrace.
HermitianMatrix validate_hermitian(const ComplexMatrix& m,
                                   ValidationLevel level = ValidationLevel::Hermitian,
                                   const Tolerances& tol = {});

/// Cyclic complex Jacobi eigensolver. Converges when the off-diagonal
/// Frobenius norm drops to 1e-14 * ||A||_F; throws NoConvergence after
/// 100 sweeps. Each eigenvector is phase-fixed so that its first
/// non-negligible component is real positive.
Eigendecomposition eigh(const HermitianMatrix& a);

/// Eigenvalues only, ascending.
std::vector<double> eigenvalues(const HermitianMatrix& a);

double min_eigenvalue(const HermitianMatrix& a);

/// V f(Lambda) V^dagger. `f` may throw portrait::Error(DomainError).
ComplexMatrix spectral_apply(const HermitianMatrix& a,
                             const std::function<double(double)>& f);

}  // namespace portrait
