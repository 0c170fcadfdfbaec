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

#ifndef MDR_CLI_HPP_
#define MDR_CLI_HPP_

#include <iosfwd>
#include <string>

#include "mdr/instance_io.hpp"

namespace mdr::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kNotConverged = 3,
};

// Entry point behind the mdregion executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Weight sweep over the simplex grid of the given resolution. Columns:
// beta_1..beta_L, value, R_1..R_L, scenario.
std::string region_csv(const InstanceFile& file, int resolution, bool bits);

}  // namespace mdr::cli

#endif  // MDR_CLI_HPP_
