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

#include "portrait/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "portrait/error.hpp"

namespace portrait {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()) + " differ");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(data_.size()));
  for (const Complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "matrix entry is NaN or infinite");
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  return from_fn(dim, dim, [](std::size_t i, std::size_t j) {
    return i == j ? Complex(1.0) : Complex(0.0);
  });
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  return from_fn(values.size(), values.size(), [&](std::size_t i, std::size_t j) {
    return i == j ? Complex(values[i]) : Complex(0.0);
  });
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim)
    throw Error(ErrorCode::InvalidArgument, "matrix unit index out of range");
  std::vector<Complex> data(dim * dim);
  data[row * dim + col] = 1.0;
  return ComplexMatrix(dim, dim, std::move(data));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator+");
  return ComplexMatrix::from_fn(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return a(i, j) + b(i, j);
  });
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator-");
  return ComplexMatrix::from_fn(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return a(i, j) - b(i, j);
  });
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  return ComplexMatrix::from_fn(a.rows(), a.cols(),
                                [&](std::size_t i, std::size_t j) { return s * a(i, j); });
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
  std::vector<Complex> out(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  return ComplexMatrix(a.rows(), b.cols(), std::move(out));
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  return ComplexMatrix::from_fn(a.cols(), a.rows(), [&](std::size_t i, std::size_t j) {
    return std::conj(a(j, i));
  });
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& b, const ComplexMatrix& c) {
  const std::size_t rows = b.rows() * c.rows();
  const std::size_t cols = b.cols() * c.cols();
  return ComplexMatrix::from_fn(rows, cols, [&](std::size_t r, std::size_t s) {
    return b(r / c.rows(), s / c.cols()) * c(r % c.rows(), s % c.cols());
  });
}

}  // namespace portrait
