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

#include <filesystem>
#include <string>
#include <string_view>

#include "portrait/matrix.hpp"

namespace portrait {

/// MatrixFile: {"dim": N, "entries": [[[re, im], ...], ...]} with N rows of N
/// pairs. Doubles are written in shortest round-trip form.
std::string matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError on malformed text or schema violations.
ComplexMatrix matrix_from_json(std::string_view text);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const ComplexMatrix& m, const std::filesystem::path& path);

}  // namespace portrait
