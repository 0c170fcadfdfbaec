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

// Numerical inner bound: best greedy-vertex weighted sum over layered test
// channels that meet every distortion constraint.

#ifndef MDR_ACHIEVABLE_HPP_
#define MDR_ACHIEVABLE_HPP_

#include <optional>
#include <vector>

#include "mdr/outer_bound.hpp"
#include "mdr/problem.hpp"
#include "mdr/test_channel.hpp"

namespace mdr {

struct AchieveResult {
  double value = 0.0;
  RatePoint rates;  // sorted order
  std::vector<double> rates_caller;
  std::optional<TestChannel> channel;
  bool converged = false;
  bool loose_corner = false;
  int evaluations = 0;
};

// True when every side and central distortion constraint holds for tc.
bool channel_meets_constraints(const ProblemInstance& inst,
                               const TestChannel& tc, double rel_tol = 1e-9);

AchieveResult achieve(const ProblemInstance& inst, const WeightProfile& profile,
                      const OptimizerOptions& opts = {});

}  // namespace mdr

#endif  // MDR_ACHIEVABLE_HPP_
