// Copyright 2026 The mdregion Authors
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

#include "mdr/error.hpp"

namespace mdr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kSingularMatrix: return "SingularMatrix";
    case ErrorKind::kOrderingViolation: return "OrderingViolation";
    case ErrorKind::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kInvalidInstance: return "InvalidInstance";
    case ErrorKind::kDegenerateDistortion: return "DegenerateDistortion";
    case ErrorKind::kSingularSubmatrix: return "SingularSubmatrix";
    case ErrorKind::kNegativeRate: return "NegativeRate";
    case ErrorKind::kUnsupportedJ: return "UnsupportedJ";
    case ErrorKind::kBracketingFailure: return "BracketingFailure";
    case ErrorKind::kBisectionFailure: return "BisectionFailure";
    case ErrorKind::kEnhancementFailure: return "EnhancementFailure";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace mdr
