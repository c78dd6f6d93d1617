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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace portrait {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Values are immutable once constructed;
/// every operation below returns a fresh matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Takes ownership of `entries` (row-major). Throws DimensionMismatch if the
  /// length is wrong, InvalidArgument on a zero dimension, NonFinite on
  /// NaN/Inf entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// Matrix unit E_{row,col} (0-based) of the given shape.
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

  template <typename Fn>
  static ComplexMatrix from_fn(std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<Complex> data(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data[i * cols + j] = fn(i, j);
    return ComplexMatrix(rows, cols, std::move(data));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  std::span<const Complex> data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
/// max_{i,j} |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, left factor major:
/// (B (x) C)[j*m + alpha, k*m + beta] = B[j,k] * C[alpha,beta].
ComplexMatrix kron(const ComplexMatrix& b, const ComplexMatrix& c);

}  // namespace portrait
