// Copyright 2026 The fsmul Authors. All rights reserved.
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

namespace fsmul {

enum class ErrorKind {
  NotPrime,
  DimensionMismatch,
  NoSolution,
  Singular,
  BadFormat,
  SyntaxError,
  ReassignedVariable,
  UseBeforeDefine,
  NonBilinearProduct,
  MissingInput,
  NotLinear,
  DeadCode,
  NotIrreducible,
  BadDegree,
  NotPolyMul,
  StageMismatch,
  TooLarge,
  ZeroMatrix,
  EmptyCode,
  ZeroScale,
  UnknownEntry,
  NotFound,
  BudgetExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; kind() carries
// the error category named in the public contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fsmul
