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

// Exact weighted-sum-rate solver for scalar sources.

#ifndef MDR_SCALAR_SOLVER_HPP_
#define MDR_SCALAR_SOLVER_HPP_

#include <optional>
#include <vector>

#include "mdr/outer_bound.hpp"
#include "mdr/problem.hpp"
#include "mdr/test_channel.hpp"

namespace mdr {

// Scalar instance in caller order.
struct ScalarInstance {
  double var_x = 0.0;
  double d0 = 0.0;
  std::vector<double> d;
  std::vector<double> k;
  double k_target = 0.0;
  double k_up = 0.0;

  int L() const { return static_cast<int>(d.size()); }
};

// Checks 0 < d0 < d_l < var_x and derives k, k_target, k_up.
ScalarInstance make_scalar_instance(double var_x, double d0,
                                    std::vector<double> d);
ScalarInstance make_scalar_instance(const ProblemInstance& inst);
ProblemInstance to_problem_instance(const ScalarInstance& s);

struct ScalarLadder {
  std::vector<double> sigma2;
  std::vector<double> uk;
  double lambda = 0.0;
};

struct ChainResult {
  bool feasible = false;
  int failed_stage = 0;  // 1-based; 0 when feasible
  std::vector<double> sigma2;
  std::vector<double> uk;
};

// k in sorted order.
ChainResult chain_solve(std::span<const double> k, const WeightProfile& profile,
                        double sigma1sq);
ChainResult chain_solve(const ScalarInstance& inst,
                        const WeightProfile& profile, double sigma1sq);

struct BisectionResult {
  double sigma1sq = 0.0;
  ScalarLadder ladder;
  int iterations = 0;
};

BisectionResult bisect_sigma1(const ScalarInstance& inst,
                              const WeightProfile& profile, double tol = 1e-12,
                              double initial_upper = 0.0);

enum class Scenario { kLooseCentral, kInterior, kEnhanced };
const char* to_string(Scenario s);

struct Enhancement {
  int replaced_index = 0;  // caller index of the loose description
  double sigma1_bar = 0.0;
  double slack = 0.0;  // (k_target + var_x)^{-1} - (uk_w + var_x)^{-1}
  double k_L = 0.0;
  double k_L_prime = 0.0;
  double d_L_prime = 0.0;
};

struct ScalarSolution {
  Scenario scenario = Scenario::kInterior;
  WeightProfile profile;
  ScalarLadder ladder;
  TestChannel channel;
  RatePoint rates;  // sorted order
  std::vector<double> rates_caller;
  double value = 0.0;
  double var_x = 0.0;
  // Central distortion actually delivered by the uncorrelated channel.
  double d0_star = 0.0;
  std::optional<Enhancement> enhancement;
};

ScalarSolution solve(const ScalarInstance& inst, const WeightProfile& profile);

// Requires J >= 2, y_j > 0 and sum y <= var_x; throws DomainError otherwise.
double F_objective(const ScalarInstance& inst, const WeightProfile& profile,
                   std::span<const double> y);

// Simplex search for the maximiser of F over the feasible y-region.
std::vector<double> maximize_F(const ScalarInstance& inst,
                               const WeightProfile& profile);

// Requires J >= 2.
double kkt_residual(const ScalarInstance& inst, const WeightProfile& profile,
                    const ScalarLadder& ladder);

// n_j = (1/sigma_j^2 - 1/var_x)^{-1}, capped at 1e12 var_x.
AuxiliaryLadder induced_ladder(const ScalarSolution& sol);

}  // namespace mdr

#endif  // MDR_SCALAR_SOLVER_HPP_
