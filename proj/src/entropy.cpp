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

#include "portrait/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "portrait/error.hpp"

namespace portrait {
namespace {

const HermitianMatrix& require_density(const HermitianMatrix& a,
                                       std::optional<HermitianMatrix>& storage) {
  if (a.level() == ValidationLevel::Density) return a;
  try {
    storage.emplace(validate_hermitian(a.matrix(), ValidationLevel::Density));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotDensity, e.what());
  }
  return *storage;
}

double entropy_of(const ComplexMatrix& m) {
  return von_neumann_entropy(validate_hermitian(m));
}

InequalityReport make_report(std::string name, double lhs, double rhs, double tol,
                             std::vector<std::pair<std::string, double>> terms) {
  InequalityReport r;
  r.inequality = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tol;
  r.satisfied = r.slack >= -tol;
  r.terms = std::move(terms);
  return r;
}

}  // namespace

std::optional<double> InequalityReport::term(std::string_view label) const {
  for (const auto& [name, value] : terms)
    if (name == label) return value;
  return std::nullopt;
}

double xlogx(double t) { return t == 0.0 ? 0.0 : t * std::log(t); }

double von_neumann_entropy(std::span<const double> eigenvalues, const Tolerances& tol) {
  double scale = 1.0;
  for (double x : eigenvalues) scale = std::max(scale, std::abs(x));
  const double floor = -tol.psd * scale;
  double s = 0.0;
  for (double x : eigenvalues) {
    if (x < floor)
      throw Error(ErrorCode::NotPSD,
                  "eigenvalue " + std::to_string(x) + " below clamp band " +
                      std::to_string(floor));
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

double von_neumann_entropy(const HermitianMatrix& a, const Tolerances& tol) {
  const std::vector<double> ev = eigenvalues(a);
  return von_neumann_entropy(ev, tol);
}

MutualInformationResult mutual_matrix_information(const HermitianMatrix& a,
                                                  BlockFactorization f) {
  std::optional<HermitianMatrix> storage;
  const HermitianMatrix& rho = require_density(a, storage);
  const PortraitPair p = portrait_pair(rho.matrix(), f);
  MutualInformationResult r;
  r.entropy_joint = von_neumann_entropy(rho);
  r.entropy_part1 = entropy_of(p.a1);
  r.entropy_part2 = entropy_of(p.a2);
  r.value = r.entropy_part1 + r.entropy_part2 - r.entropy_joint;
  return r;
}

MutualInformationResult mutual_information_via_embedding(const HermitianMatrix& a,
                                                         BlockFactorization f) {
  std::optional<HermitianMatrix> storage;
  const HermitianMatrix& rho = require_density(a, storage);
  const PortraitPair p = portrait_pair(rho.matrix(), f);
  const EmbeddingSpec pad{rho.dim(), 0};
  const ComplexMatrix a1 = embed(p.a1, pad);
  const ComplexMatrix a2 = embed(p.a2, pad);

  // I = Tr(A ln A - A1~ ln A1~ - A2~ ln A2~), evaluated as one trace.
  auto log_or_zero = [](double x) { return x > 0.0 ? std::log(x) : 0.0; };
  const ComplexMatrix combined =
      rho.matrix() * spectral_apply(rho, log_or_zero) -
      a1 * spectral_apply(validate_hermitian(a1), log_or_zero) -
      a2 * spectral_apply(validate_hermitian(a2), log_or_zero);

  MutualInformationResult r;
  r.value = trace(combined).real();
  r.entropy_joint = von_neumann_entropy(rho);
  r.entropy_part1 = entropy_of(a1);
  r.entropy_part2 = entropy_of(a2);
  return r;
}

InequalityReport check_subadditivity(const HermitianMatrix& a, BlockFactorization f,
                                     double tol) {
  std::optional<HermitianMatrix> storage;
  const HermitianMatrix& rho = require_density(a, storage);
  const PortraitPair p = portrait_pair(rho.matrix(), f);
  const double s = von_neumann_entropy(rho);
  const double s1 = entropy_of(p.a1);
  const double s2 = entropy_of(p.a2);
  return make_report("subadditivity", s, s1 + s2, tol,
                     {{"S_joint", s}, {"S_part1", s1}, {"S_part2", s2}});
}

InequalityReport check_padded_subadditivity(const HermitianMatrix& a,
                                            EmbeddingSpec spec, BlockFactorization f,
                                            double tol) {
  std::optional<HermitianMatrix> storage;
  const HermitianMatrix& rho = require_density(a, storage);
  if (spec.target_dim != f.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "padded dim " + std::to_string(spec.target_dim) + " != " +
                    std::to_string(f.blocks) + "*" + std::to_string(f.block_size));
  const ComplexMatrix padded = embed(rho.matrix(), spec);
  const PortraitPair p = portrait_pair(padded, f);
  const double s = von_neumann_entropy(rho);
  const double s_padded = entropy_of(padded);
  const double s1 = entropy_of(p.a1);
  const double s2 = entropy_of(p.a2);
  return make_report("padded_subadditivity", s, s1 + s2, tol,
                     {{"S_joint", s},
                      {"S_joint_embedded", s_padded},
                      {"S_part1", s1},
                      {"S_part2", s2}});
}

InequalityReport check_scaled(const HermitianMatrix& a, BlockFactorization f,
                              double tol) {
  const PortraitPair p = portrait_pair(a.matrix(), f);
  const double mu = a.trace();
  // The spectrum check inside von_neumann_entropy enforces PSD.
  const double s = von_neumann_entropy(a);
  if (!(mu > 0.0))
    throw Error(ErrorCode::ZeroTrace, "trace " + std::to_string(mu) + " is not positive");
  const double s1 = entropy_of(p.a1);
  const double s2 = entropy_of(p.a2);
  const double mu_term = xlogx(mu);
  return make_report("scaled_subadditivity", s, s1 + s2 + mu_term, tol,
                     {{"S_joint", s},
                      {"S_part1", s1},
                      {"S_part2", s2},
                      {"mu", mu},
                      {"mu_ln_mu", mu_term}});
}

InequalityReport check_shifted(const HermitianMatrix& a, EmbeddingSpec spec,
                               BlockFactorization f, double x, double tol) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "shift must be finite");
  if (spec.target_dim != f.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "padded dim " + std::to_string(spec.target_dim) + " != " +
                    std::to_string(f.blocks) + "*" + std::to_string(f.block_size));
  const ComplexMatrix shifted = shift(embed(a.matrix(), spec), x);
  const HermitianMatrix a_prime = validate_hermitian(shifted);
  const std::vector<double> ev = eigenvalues(a_prime);
  double s = 0.0;
  try {
    s = von_neumann_entropy(ev);
  } catch (const Error&) {
    throw Error(ErrorCode::ShiftTooSmall, "x = " + std::to_string(x) +
                                              " leaves minimum eigenvalue " +
                                              std::to_string(ev.front()));
  }
  const PortraitPair p = portrait_pair(a_prime.matrix(), f);
  const double s1 = entropy_of(p.a1);
  const double s2 = entropy_of(p.a2);
  const double tr = a_prime.trace();
  const double tr_term = xlogx(tr);
  return make_report("shifted_subadditivity", s, s1 + s2 + tr_term, tol,
                     {{"S_shifted", s},
                      {"S_part1", s1},
                      {"S_part2", s2},
                      {"trace_shifted", tr},
                      {"trace_ln_trace", tr_term},
                      {"lhs_regrouped", s - tr_term},
                      {"rhs_regrouped", s1 + s2}});
}

InequalityReport check_ssa_analog(const HermitianMatrix& a,
                                  std::array<std::size_t, 3> radices, double tol) {
  std::optional<HermitianMatrix> storage;
  const HermitianMatrix& rho = require_density(a, storage);
  const std::vector<std::size_t> r(radices.begin(), radices.end());
  const double s123 = von_neumann_entropy(rho);
  const double s2 = entropy_of(chain_portrait(rho.matrix(), {r, {1}}));
  const double s12 = entropy_of(chain_portrait(rho.matrix(), {r, {0, 1}}));
  const double s23 = entropy_of(chain_portrait(rho.matrix(), {r, {1, 2}}));
  return make_report("strong_subadditivity", s123 + s2, s12 + s23, tol,
                     {{"S_123", s123}, {"S_2", s2}, {"S_12", s12}, {"S_23", s23}});
}

}  // namespace portrait
