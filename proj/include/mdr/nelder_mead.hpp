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

#ifndef MDR_NELDER_MEAD_HPP_
#define MDR_NELDER_MEAD_HPP_

#include <functional>

#include "mdr/linalg.hpp"

namespace mdr {

struct NelderMeadOptions {
  double rel_tol = 1e-9;
  int patience = 25;
  int max_evals = 20000;
  // Fresh simplices built around the incumbent after the first run stalls.
  int max_restarts = 6;
};

struct NelderMeadResult {
  Vector x;
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(const Vector&)>;

// Restarted simplex search (GSL nmsimplex2). Non-finite values count as +inf.
NelderMeadResult nelder_mead_minimize(const Objective& f, const Vector& x0,
                                      const Vector& step,
                                      const NelderMeadOptions& opts);

}  // namespace mdr

#endif  // MDR_NELDER_MEAD_HPP_
