// Copyright 2026 The wpcy Authors
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

#ifndef WPCY_ERRORS_HPP_
#define WPCY_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wpcy {

enum class ErrorKind {
  kInvalidArgument,
  kEmptyInput,
  kNotWellFormed,
  kOutOfRange,
  kReconstructionFailure,
  kPoleAtOne,
  kNegativeExponent,
  kNonIntegerMilnor,
  kDivisionNotExact,
  kSubsetTooSmall,
  kNotIP,
  kNotPolynomial,
  kSignPatternViolation,
  kNonIntegerCoefficient,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception; `kind()` lets
// callers (the CLI in particular) map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wpcy

#endif  // WPCY_ERRORS_HPP_
