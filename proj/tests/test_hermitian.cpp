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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "portrait/hermitian.hpp"
#include "portrait/randgen.hpp"
#include "support.hpp"

using namespace portrait;
using portrait::testing::error_of;
using portrait::testing::real_matrix;

TEST_SUITE("validate_hermitian") {
  TEST_CASE("identity is accepted at every level that applies") {
    const HermitianMatrix h = validate_hermitian(ComplexMatrix::identity(2));
    CHECK(h.dim() == 2);
    CHECK(h.level() == ValidationLevel::Hermitian);
    CHECK(validate_hermitian(ComplexMatrix::identity(2), ValidationLevel::PSD).level() ==
          ValidationLevel::PSD);
  }

  TEST_CASE("nilpotent matrix is not Hermitian") {
    CHECK(error_of([] { validate_hermitian(real_matrix(2, 2, {0, 1, 0, 0})); }) ==
          ErrorCode::NotHermitian);
  }

  TEST_CASE("maximally mixed qubit is a density matrix") {
    const std::vector<double> d{0.5, 0.5};
    const HermitianMatrix h =
        validate_hermitian(ComplexMatrix::diagonal(d), ValidationLevel::Density);
    CHECK(h.trace() == doctest::Approx(1.0));
  }

  TEST_CASE("error paths") {
    CHECK(error_of([] { validate_hermitian(ComplexMatrix::zeros(2, 3)); }) ==
          ErrorCode::NotSquare);
    const std::vector<double> neg{1.0, -1.0};
    CHECK(error_of([&] {
            validate_hermitian(ComplexMatrix::diagonal(neg), ValidationLevel::PSD);
          }) == ErrorCode::NotPSD);
    CHECK(error_of([] {
            validate_hermitian(ComplexMatrix::identity(2), ValidationLevel::Density);
          }) == ErrorCode::NotUnitTrace);
  }

  TEST_CASE("tolerance band") {
    // Asymmetry below 1e-12 * (1 + max|A|) passes and is symmetrized away.
    const ComplexMatrix almost = real_matrix(2, 2, {1, 0.5 + 1e-13, 0.5, 1});
    const HermitianMatrix h = validate_hermitian(almost);
    CHECK(h.matrix()(0, 1) == h.matrix()(1, 0));
    const ComplexMatrix off = real_matrix(2, 2, {1, 0.5 + 1e-9, 0.5, 1});
    CHECK(error_of([&] { validate_hermitian(off); }) == ErrorCode::NotHermitian);

    // Custom tolerances override the defaults.
    Tolerances loose;
    loose.hermitian = 1e-6;
    CHECK_NOTHROW(validate_hermitian(off, ValidationLevel::Hermitian, loose));

    // A -1e-12 eigenvalue sits inside the PSD band.
    const std::vector<double> tiny{1.0, -1e-12};
    CHECK_NOTHROW(validate_hermitian(ComplexMatrix::diagonal(tiny), ValidationLevel::PSD));
  }

  TEST_CASE("non-finite entries are rejected at construction") {
    CHECK(error_of([] { real_matrix(1, 1, {std::nan("")}); }) == ErrorCode::NonFinite);
  }

  TEST_CASE("input is not mutated") {
    const ComplexMatrix m = real_matrix(2, 2, {1, 2, 2, 1});
    const ComplexMatrix copy = m;
    (void)validate_hermitian(m);
    CHECK(max_abs_diff(m, copy) == 0.0);
  }
}

TEST_SUITE("eigh") {
  TEST_CASE("diagonal input") {
    const std::vector<double> d{3.0, 1.0};
    const Eigendecomposition e = eigh(validate_hermitian(ComplexMatrix::diagonal(d)));
    REQUIRE(e.eigenvalues.size() == 2);
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(3.0));
  }

  TEST_CASE("Pauli X spectrum") {
    const auto ev = eigenvalues(validate_hermitian(real_matrix(2, 2, {0, 1, 1, 0})));
    CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("Pauli Y has complex eigenvectors") {
    const ComplexMatrix y(2, 2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
    const Eigendecomposition e = eigh(validate_hermitian(y));
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0));
    const ComplexMatrix recon =
        e.eigenvectors * ComplexMatrix::diagonal(e.eigenvalues) * adjoint(e.eigenvectors);
    CHECK(max_abs_diff(recon, y) < 1e-14);
  }

  TEST_CASE("random Hermitian reconstruction, orthonormality and ordering") {
    SeededGenerator gen(7, 0);
    for (std::size_t dim : {1u, 2u, 5u, 8u, 17u}) {
      for (int trial = 0; trial < 10; ++trial) {
        const HermitianMatrix a = random_hermitian(gen, dim, 3.0);
        const Eigendecomposition e = eigh(a);
        const ComplexMatrix& v = e.eigenvectors;
        const ComplexMatrix recon = v * ComplexMatrix::diagonal(e.eigenvalues) * adjoint(v);
        CHECK(frobenius_norm(recon - a.matrix()) <=
              1e-10 * std::max(1.0, frobenius_norm(a.matrix())));
        CHECK(max_abs_diff(adjoint(v) * v, ComplexMatrix::identity(dim)) <= 1e-11);
        CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
        double sum = 0.0;
        for (double x : e.eigenvalues) sum += x;
        CHECK(std::abs(sum - a.trace()) <= 1e-10 * std::max(1.0, std::abs(a.trace())));
        // Phase convention: first non-negligible component real positive.
        for (std::size_t k = 0; k < dim; ++k) {
          for (std::size_t i = 0; i < dim; ++i) {
            if (std::abs(v(i, k)) > 1e-12) {
              CHECK(v(i, k).imag() == doctest::Approx(0.0).epsilon(1e-15));
              CHECK(v(i, k).real() > 0.0);
              break;
            }
          }
        }
      }
    }
  }

  TEST_CASE("deterministic for identical input") {
    SeededGenerator gen(3, 1);
    const HermitianMatrix a = random_hermitian(gen, 6);
    const Eigendecomposition e1 = eigh(a);
    const Eigendecomposition e2 = eigh(a);
    CHECK(e1.eigenvalues == e2.eigenvalues);
    CHECK(max_abs_diff(e1.eigenvectors, e2.eigenvectors) == 0.0);
  }

  TEST_CASE("degenerate spectrum") {
    const Eigendecomposition e = eigh(validate_hermitian(ComplexMatrix::identity(4)));
    for (double x : e.eigenvalues) CHECK(x == 1.0);
    CHECK(max_abs_diff(e.eigenvectors, ComplexMatrix::identity(4)) == 0.0);
  }
}

TEST_SUITE("spectral_apply") {
  TEST_CASE("identity function reproduces the input") {
    SeededGenerator gen(11, 0);
    const HermitianMatrix a = random_hermitian(gen, 7);
    const ComplexMatrix out = spectral_apply(a, [](double x) { return x; });
    CHECK(max_abs_diff(out, a.matrix()) <= 1e-12);
  }

  TEST_CASE("square on a diagonal matrix") {
    const std::vector<double> d{2.0, 3.0};
    const ComplexMatrix out =
        spectral_apply(validate_hermitian(ComplexMatrix::diagonal(d)), [](double x) { return x * x; });
    CHECK(out(0, 0).real() == doctest::Approx(4.0));
    CHECK(out(1, 1).real() == doctest::Approx(9.0));
    CHECK(std::abs(out(0, 1)) < 1e-15);
  }

  TEST_CASE("exponential of Pauli X matches cosh/sinh") {
    const ComplexMatrix out = spectral_apply(validate_hermitian(real_matrix(2, 2, {0, 1, 1, 0})),
                                             [](double x) { return std::exp(x); });
    const ComplexMatrix expected =
        real_matrix(2, 2, {std::cosh(1.0), std::sinh(1.0), std::sinh(1.0), std::cosh(1.0)});
    CHECK(max_abs_diff(out, expected) < 1e-14);
  }

  TEST_CASE("undefined function value raises DomainError") {
    const std::vector<double> d{1.0, -1.0};
    CHECK(error_of([&] {
            spectral_apply(validate_hermitian(ComplexMatrix::diagonal(d)),
                           [](double x) { return std::log(x); });
          }) == ErrorCode::DomainError);
  }
}

TEST_SUITE("kron and min_eigenvalue") {
  TEST_CASE("identity factors") {
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);
  }

  TEST_CASE("projector tensor Pauli X") {
    const ComplexMatrix k = kron(real_matrix(2, 2, {1, 0, 0, 0}), real_matrix(2, 2, {0, 1, 1, 0}));
    const ComplexMatrix expected =
        real_matrix(4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(max_abs_diff(k, expected) == 0.0);
  }

  TEST_CASE("index convention and trace multiplicativity") {
    SeededGenerator gen(5, 0);
    const ComplexMatrix b = ginibre(gen, 2);
    const ComplexMatrix c = ginibre(gen, 3);
    const ComplexMatrix k = kron(b, c);
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t kk = 0; kk < 2; ++kk)
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t be = 0; be < 3; ++be)
            CHECK(k(j * 3 + a, kk * 3 + be) == b(j, kk) * c(a, be));
    CHECK(std::abs(trace(k) - trace(b) * trace(c)) <= 1e-12);
  }

  TEST_CASE("min eigenvalue") {
    const std::vector<double> d{1.0, -1.0};
    CHECK(min_eigenvalue(validate_hermitian(ComplexMatrix::diagonal(d))) == -1.0);
    CHECK(min_eigenvalue(validate_hermitian(ComplexMatrix::identity(3))) == 1.0);
    SeededGenerator gen(9, 0);
    for (int i = 0; i < 20; ++i)
      CHECK(min_eigenvalue(random_mixed_density(gen, 5)) >= -1e-10);
  }
}
