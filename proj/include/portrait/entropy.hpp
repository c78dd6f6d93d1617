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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "portrait/hermitian.hpp"
#include "portrait/maps.hpp"

namespace portrait {

inline constexpr double kDefaultSlackTolerance = 1e-9;

/// Outcome of one inequality check, lhs <= rhs. All values in nats.
struct InequalityReport {
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double tolerance = kDefaultSlackTolerance;
  bool satisfied = false;  // slack >= -tolerance
  std::vector<std::pair<std::string, double>> terms;

  /// Looks up a term by label; nullopt if absent.
  std::optional<double> term(std::string_view label) const;
};

struct MutualInformationResult {
  double value = 0.0;  // S(A1) + S(A2) - S(A)
  double entropy_joint = 0.0;
  double entropy_part1 = 0.0;
  double entropy_part2 = 0.0;
};

/// t ln t with 0 ln 0 = 0.
double xlogx(double t);

/// -Tr A ln A over the spectrum. Eigenvalues in [-tol.psd * s, 0) are
/// clamped to zero (s = max(1, spectral norm)); anything below throws NotPSD.
/// The trace need not be one.
double von_neumann_entropy(const HermitianMatrix& a, const Tolerances& tol = {});
double von_neumann_entropy(std::span<const double> eigenvalues,
                           const Tolerances& tol = {});

MutualInformationResult mutual_matrix_information(const HermitianMatrix& a,
                                                  BlockFactorization f);

/// Same quantity evaluated on the N x N zero-padded portraits.
MutualInformationResult mutual_information_via_embedding(const HermitianMatrix& a,
                                                         BlockFactorization f);

/// S(A) <= S(A1) + S(A2) for a density matrix.
InequalityReport check_subadditivity(const HermitianMatrix& a, BlockFactorization f,
                                     double tol = kDefaultSlackTolerance);

/// Subadditivity of the portraits of embed(A, spec); requires
/// spec.target_dim == f.dim().
InequalityReport check_padded_subadditivity(const HermitianMatrix& a,
                                            EmbeddingSpec spec,
                                            BlockFactorization f,
                                            double tol = kDefaultSlackTolerance);

/// -Tr A ln A <= -Tr A1 ln A1 - Tr A2 ln A2 + mu ln mu, mu = Tr A > 0.
InequalityReport check_scaled(const HermitianMatrix& a, BlockFactorization f,
                              double tol = kDefaultSlackTolerance);

/// Shifted inequality for an arbitrary Hermitian A. With A' = embed(A) + x I,
///   lhs = -Tr A' ln A'
///   rhs = -Tr A'1 ln A'1 - Tr A'2 ln A'2 + Tr A' ln Tr A'.
/// The regrouped form (the trace term moved to the left) is reported as the
/// terms "lhs_regrouped" and "rhs_regrouped". Throws ShiftTooSmall if A' is
/// not PSD.
InequalityReport check_shifted(const HermitianMatrix& a, EmbeddingSpec spec,
                               BlockFactorization f, double x,
                               double tol = kDefaultSlackTolerance);

/// S(123) + S(2) <= S(12) + S(23) with reductions taken by chain_portrait.
InequalityReport check_ssa_analog(const HermitianMatrix& a,
                                  std::array<std::size_t, 3> radices,
                                  double tol = kDefaultSlackTolerance);

}  // namespace portrait
