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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "portrait/error.hpp"
#include "portrait/matrix.hpp"

namespace portrait::testing {

/// Runs `fn` and returns the ErrorCode it throws; fails the test otherwise.
template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected portrait::Error");
  return ErrorCode::InvalidArgument;
}

inline ComplexMatrix real_matrix(std::size_t rows, std::size_t cols,
                                 std::initializer_list<double> values) {
  std::vector<Complex> data(values.begin(), values.end());
  return ComplexMatrix(rows, cols, std::move(data));
}

inline ComplexMatrix bell_projector() {
  // (|00> + |11>)(<00| + <11|) / 2
  return real_matrix(4, 4, {0.5, 0, 0, 0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0.5, 0, 0, 0.5});
}

/// Projector onto (1/sqrt d) sum_i |ii> in d*d dimensions.
inline ComplexMatrix maximally_entangled(std::size_t d) {
  return ComplexMatrix::from_fn(d * d, d * d, [d](std::size_t r, std::size_t s) {
    const bool on_r = r / d == r % d;
    const bool on_s = s / d == s % d;
    return on_r && on_s ? Complex(1.0 / static_cast<double>(d)) : Complex(0.0);
  });
}

inline ComplexMatrix ghz_projector() {
  return ComplexMatrix::from_fn(8, 8, [](std::size_t r, std::size_t s) {
    const bool on_r = r == 0 || r == 7;
    const bool on_s = s == 0 || s == 7;
    return on_r && on_s ? Complex(0.5) : Complex(0.0);
  });
}

inline std::vector<double> nonzero_sorted(std::vector<double> v, double cutoff) {
  std::vector<double> out;
  for (double x : v)
    if (x > cutoff) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace portrait::testing
