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

// Randomised property suites run by the `verify` subcommand.

#ifndef MDR_VERIFY_HPP_
#define MDR_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mdr/outer_bound.hpp"
#include "mdr/problem.hpp"
#include "mdr/scalar_solver.hpp"
#include "mdr/test_channel.hpp"

namespace mdr {

using Rng = std::mt19937_64;

using BoundFunction = std::function<double(
    const ProblemInstance&, const WeightProfile&, const AuxiliaryLadder&)>;

struct SuiteResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  double worst = 0.0;  // largest observed violation measure
  std::string first_failure;
};

struct VerifyOptions {
  std::uint64_t seed = 20260415;
  // Replaceable so that a corrupted objective can be shown to fail.
  BoundFunction bound = bound_objective;
  int tightness_instances = 40;
};

// Random generators shared by the suites.
std::vector<double> random_strict_weights(Rng& rng, int L);
Matrix random_spd(Rng& rng, int n, double lo, double hi);
// Interior scalar instance with strictly decreasing weights.
ScalarInstance random_interior_instance(Rng& rng, int L,
                                        const WeightProfile& profile);
// Scalar instance whose lowest-weight side constraint is loose.
std::optional<ScalarInstance> random_enhanced_instance(
    Rng& rng, int L, const WeightProfile& profile);
// Layered channel with PD K_w; K_l, A_j random.
TestChannel random_layered_channel(Rng& rng, int n,
                                   const WeightProfile& profile);
// Layered channel meeting every distortion constraint of inst.
std::optional<TestChannel> random_feasible_channel(Rng& rng,
                                                   const ProblemInstance& inst,
                                                   const WeightProfile& profile);
AuxiliaryLadder random_ladder(Rng& rng, int n, const WeightProfile& profile,
                              double scale);

// Cov[x | u_S] by conditioning the joint Gaussian (x, u_S) directly.
Matrix conditional_covariance(const Matrix& kx, const Matrix& kw, int n,
                              const Subset& s);

SuiteResult suite_linalg(const VerifyOptions& opts);
SuiteResult suite_channel(const VerifyOptions& opts);
SuiteResult suite_epi(const VerifyOptions& opts);
SuiteResult suite_monotonicity(const VerifyOptions& opts);
SuiteResult suite_tightness(const VerifyOptions& opts);
SuiteResult suite_loose_central(const VerifyOptions& opts);
SuiteResult suite_enhancement(const VerifyOptions& opts);
SuiteResult suite_soundness(const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

}  // namespace mdr

#endif  // MDR_VERIFY_HPP_
