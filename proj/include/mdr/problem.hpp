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

#ifndef MDR_PROBLEM_HPP_
#define MDR_PROBLEM_HPP_

#include <span>
#include <vector>

#include "mdr/linalg.hpp"

namespace mdr {

// Source covariance and distortion constraints. Descriptions are stored in
// the caller's order; solvers map them through WeightProfile::permutation.
struct ProblemInstance {
  SpdMatrix Kx;
  SpdMatrix D0;
  std::vector<SpdMatrix> D;

  int N() const { return Kx.dim(); }
  int L() const { return static_cast<int>(D.size()); }
};

// Checks 0 < D0 < D_l < Kx and L >= 2; throws InvalidInstance naming the
// violated relation.
void validate(const ProblemInstance& inst);

ProblemInstance make_instance(SpdMatrix kx, SpdMatrix d0,
                              std::vector<SpdMatrix> d);

struct WeightGroup {
  double alpha;
  int m;
};

struct WeightProfile {
  double alpha0 = 0.0;
  std::vector<WeightGroup> groups;
  // permutation[i] is the caller index of the i-th largest weight.
  std::vector<int> permutation;
  std::vector<double> sorted_beta;

  int J() const { return static_cast<int>(groups.size()); }
  int L() const { return static_cast<int>(permutation.size()); }
  // Cumulative count M_1^j; M(0) == 0.
  int M(int j) const;
  double alpha(int j) const { return groups[static_cast<size_t>(j - 1)].alpha; }
  int m(int j) const { return groups[static_cast<size_t>(j - 1)].m; }
};

WeightProfile group_weights(std::span<const double> beta);

struct RatePoint {
  std::vector<double> rates;
};

// point is in sorted order.
double weighted_sum(const WeightProfile& profile, const RatePoint& point);

std::vector<double> to_caller_order(const WeightProfile& profile,
                                    std::span<const double> sorted);
std::vector<double> to_sorted_order(const WeightProfile& profile,
                                    std::span<const double> caller);

// D reordered so that D[i] belongs to the i-th largest weight.
std::vector<SpdMatrix> sorted_distortions(const ProblemInstance& inst,
                                          const WeightProfile& profile);

double min_single_description_rate(const SpdMatrix& kx, const SpdMatrix& dl);
double min_single_description_rate(const ProblemInstance& inst, int l);

}  // namespace mdr

#endif  // MDR_PROBLEM_HPP_
