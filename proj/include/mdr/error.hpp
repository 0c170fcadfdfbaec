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

#ifndef MDR_ERROR_HPP_
#define MDR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mdr {

enum class ErrorKind {
  kNotPositiveDefinite,
  kDimensionMismatch,
  kSingularMatrix,
  kOrderingViolation,
  kNonPositiveWeight,
  kLengthMismatch,
  kInvalidInstance,
  kDegenerateDistortion,
  kSingularSubmatrix,
  kNegativeRate,
  kUnsupportedJ,
  kBracketingFailure,
  kBisectionFailure,
  kEnhancementFailure,
  kDomainError,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mdr

#endif  // MDR_ERROR_HPP_
