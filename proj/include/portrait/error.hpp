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

#include <stdexcept>
#include <string>
#include <string_view>

namespace portrait {

enum class ErrorCode {
  NonFinite,
  NotSquare,
  NotHermitian,
  NotPSD,
  NotUnitTrace,
  NotDensity,
  NoConvergence,
  DomainError,
  DimensionMismatch,
  SpecTooSmall,
  EmptyKeep,
  ZeroTrace,
  ShiftTooSmall,
  InvalidArgument,
  ParseError,
  IoError,
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotDensity: return "NotDensity";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SpecTooSmall: return "SpecTooSmall";
    case ErrorCode::EmptyKeep: return "EmptyKeep";
    case ErrorCode::ZeroTrace: return "ZeroTrace";
    case ErrorCode::ShiftTooSmall: return "ShiftTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}


/// Exception carried by every failing library operation. The code is what
/// the C API reports; the message is a one-line human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace portrait
