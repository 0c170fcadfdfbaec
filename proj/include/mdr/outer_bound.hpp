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

#ifndef MDR_OUTER_BOUND_HPP_
#define MDR_OUTER_BOUND_HPP_

#include <cstdint>
#include <vector>

#include "mdr/linalg.hpp"
#include "mdr/problem.hpp"

namespace mdr {

// N_1..N_J with 0 < a_1 N_1 < ... < a_J N_J.
struct AuxiliaryLadder {
  std::vector<SpdMatrix> N;
  int J() const { return static_cast<int>(N.size()); }
};

struct OptimizerOptions {
  int starts = 8;
  double rel_tol = 1e-9;
  int patience = 25;
  int max_evals = 20000;  // per start
  std::uint64_t seed = 20260415;
  double eps_cone = 1e-9;
};

struct BoundResult {
  double value = 0.0;
  AuxiliaryLadder ladder;
  bool converged = false;
  int evaluations = 0;
  // The supremum is the loose-central limit, approached as the ladder -> 0.
  bool at_limit = false;
  std::vector<double> start_values;
};

// Per-term breakdown of the bound. For J = 1 the whole sum-rate term sits in
// head and tail is zero.
struct BoundTerms {
  double alpha0 = 0.0;
  double head = 0.0;
  std::vector<double> middle;
  double tail = 0.0;

  double total() const;
};

BoundTerms bound_objective_terms(const ProblemInstance& inst,
                                 const WeightProfile& profile,
                                 const AuxiliaryLadder& ladder);

// Throws OrderingViolation when the ladder leaves the cone; returns -inf when
// a difference N_{j+1} - N_j is numerically singular.
double bound_objective(const ProblemInstance& inst,
                       const WeightProfile& profile,
                       const AuxiliaryLadder& ladder);

double loose_central_bound(const ProblemInstance& inst,
                           const WeightProfile& profile);

// N_j = eps (1 + eps + ... + eps^{j-1}) / a_j * I.
AuxiliaryLadder epsilon_ladder(const WeightProfile& profile, int n, double eps);

// a_1 N_1 = G_1 G_1^t + eps I, a_{j+1} N_{j+1} = a_j N_j + G G^t + eps I.
// factors holds J column-major n x n blocks.
AuxiliaryLadder ladder_from_factors(const WeightProfile& profile, int n,
                                    const Vector& factors, double eps);

BoundResult maximize_bound(const ProblemInstance& inst,
                           const WeightProfile& profile,
                           const OptimizerOptions& opts = {});

}  // namespace mdr

#endif  // MDR_OUTER_BOUND_HPP_
