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

#ifndef MDR_INSTANCE_IO_HPP_
#define MDR_INSTANCE_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdr/problem.hpp"

namespace mdr {

struct InstanceFile {
  ProblemInstance instance;
  std::optional<std::vector<double>> beta;
};

// Keys: "Kx", "D0", "D" (array of matrices), optional "beta". Matrices are
// row-major arrays of arrays; a bare number is read as a 1x1 matrix. Throws
// InvalidInstance naming the missing key or violated invariant.
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json instance_to_json(const InstanceFile& file);

}  // namespace mdr

#endif  // MDR_INSTANCE_IO_HPP_
