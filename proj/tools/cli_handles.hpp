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

// RAII wrappers over the C handles and small conversions used by the CLI.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "portrait/portrait.h"

namespace portrait_cli {

/// Thrown for anything that maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixDeleter {
  void operator()(pm_matrix* m) const noexcept { pm_matrix_free(m); }
};
struct ReportDeleter {
  void operator()(pm_report* r) const noexcept { pm_report_free(r); }
};
struct GeneratorDeleter {
  void operator()(pm_generator* g) const noexcept { pm_generator_free(g); }
};

using Matrix = std::unique_ptr<pm_matrix, MatrixDeleter>;
using Report = std::unique_ptr<pm_report, ReportDeleter>;
using Generator = std::unique_ptr<pm_generator, GeneratorDeleter>;

inline void check(pm_status status, const std::string& context) {
  if (status != PM_OK)
    throw InputError(context + ": " + pm_last_error());
}

/// Calls `fn(pm_matrix**)` and wraps the produced handle.
template <typename Fn>
Matrix make_matrix(Fn&& fn, const std::string& context) {
  pm_matrix* raw = nullptr;
  check(fn(&raw), context);
  return Matrix(raw);
}

template <typename Fn>
Report make_report(Fn&& fn, const std::string& context) {
  pm_report* raw = nullptr;
  check(fn(&raw), context);
  return Report(raw);
}

inline std::vector<double> raw_data(const pm_matrix* m) {
  std::vector<double> out(2 * pm_matrix_rows(m) * pm_matrix_cols(m));
  check(pm_matrix_copy_data(m, out.data(), out.size()), "copy");
  return out;
}

inline Matrix scaled(const pm_matrix* m, double factor) {
  std::vector<double> data = raw_data(m);
  for (double& x : data) x *= factor;
  return make_matrix(
      [&](pm_matrix** out) {
        return pm_matrix_create(pm_matrix_rows(m), pm_matrix_cols(m), data.data(), out);
      },
      "scale");
}

inline double real_trace(const pm_matrix* m) {
  double re = 0.0, im = 0.0;
  check(pm_matrix_trace(m, &re, &im), "trace");
  return re;
}

/// Largest entrywise |a - b|; shapes must agree.
inline double max_abs_diff(const pm_matrix* a, const pm_matrix* b) {
  if (pm_matrix_rows(a) != pm_matrix_rows(b) || pm_matrix_cols(a) != pm_matrix_cols(b))
    return std::numeric_limits<double>::infinity();
  const std::vector<double> x = raw_data(a);
  const std::vector<double> y = raw_data(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); i += 2)
    worst = std::max(worst, std::hypot(x[i] - y[i], x[i + 1] - y[i + 1]));
  return worst;
}

}  // namespace portrait_cli
