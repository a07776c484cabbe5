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

#include "wpcy/errors.hpp"

namespace wpcy {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kNotWellFormed: return "NotWellFormed";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kReconstructionFailure: return "ReconstructionFailure";
    case ErrorKind::kPoleAtOne: return "PoleAtOne";
    case ErrorKind::kNegativeExponent: return "NegativeExponent";
    case ErrorKind::kNonIntegerMilnor: return "NonIntegerMilnor";
    case ErrorKind::kDivisionNotExact: return "DivisionNotExact";
    case ErrorKind::kSubsetTooSmall: return "SubsetTooSmall";
    case ErrorKind::kNotIP: return "NotIP";
    case ErrorKind::kNotPolynomial: return "NotPolynomial";
    case ErrorKind::kSignPatternViolation: return "SignPatternViolation";
    case ErrorKind::kNonIntegerCoefficient: return "NonIntegerCoefficient";
  }
  return "Unknown";
}

}  // namespace wpcy
