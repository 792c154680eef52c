// Copyright 2026 The majorana-sphere Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace majorana {

enum class ErrorCode {
  InvalidArgument,
  NotOnSphere,
  ZeroState,
  ZeroPolynomial,
  DimensionMismatch,
  WrongDimension,
  SingularMatrix,
  ZeroInput,
  NotUnitary,
  UnknownGate,
  SyntaxError,
  ArityError,
  NonUnitaryGate,
  FormatError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::NonUnitaryGate: return "NonUnitaryGate";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Location of a gate-script diagnostic. `offset` is a 0-based byte index,
/// `line` and `column` are 1-based.
struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ScriptError : public Error {
 public:
  ScriptError(ErrorCode code, SourcePos pos, std::string token,
              const std::string& what)
      : Error(code, "line " + std::to_string(pos.line) + ", column " +
                        std::to_string(pos.column) + ": " + what),
        pos_(pos),
        token_(std::move(token)) {}

  const SourcePos& pos() const noexcept { return pos_; }
  const std::string& token() const noexcept { return token_; }

 private:
  SourcePos pos_;
  std::string token_;
};

}  // namespace majorana
